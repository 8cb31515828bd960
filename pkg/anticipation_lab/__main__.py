import sys

from anticipation_lab.application import main

if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""
The command line of the toolkit: reads arguments, validates them into a run configuration and dispatches
to the handler of the chosen command
"""
import typing

from argparse import ArgumentParser

from pydantic import ValidationError

from anticipation_lab.anticipation import MODEL_KINDS
from anticipation_lab.configuration import LINEAR_PROGRAM_SOLVER
from anticipation_lab.configuration import RunConfig
from anticipation_lab.configuration import missing_flags
from anticipation_lab.exceptions import AnticipationLabError
from anticipation_lab.handlers import get_command_handlers
from anticipation_lab.inversion import SMOOTHINGS
from anticipation_lab.kernels import PAIRINGS
from anticipation_lab.kernels import TEST_FUNCTIONS
from anticipation_lab.measures import SPECTRUM_KINDS
from anticipation_lab.scenario import SOLVERS
from anticipation_lab.system import logging
from anticipation_lab.utilities.common import parse_number_list

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _solver_name(value: str) -> str:
    return value.replace("-", "_")


def _output_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False)
    parser.add_argument("-o", "--output", dest="output", help="Where to write the result; stdout by default")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=("json", "csv"),
        help="The format of the result; read from the suffix of --output by default"
    )
    return parser


class Arguments(object):
    def __init__(self, *args):
        self.__command: typing.Optional[str] = None
        self.__verbose: bool = False
        self.__configuration: typing.Optional[RunConfig] = None

        self.__parse_command_line(*args)

    @property
    def command(self) -> str:
        return self.__command

    @property
    def verbose(self) -> bool:
        return self.__verbose

    @property
    def configuration(self) -> RunConfig:
        return self.__configuration

    def __parse_command_line(self, *args):
        parser = ArgumentParser(
            "anticipation-lab",
            description="Build and analyze evolution scenarios over point spectra"
        )

        parser.add_argument("-v", dest="verbose", action="store_true", help="Log debugging information")
        parser.add_argument(
            "--threads",
            dest="threads",
            type=int,
            help="Worker threads for trial loops; ANTICIPATION_LAB_THREADS when omitted"
        )

        output = _output_parser()
        command_parsers: typing.Dict[str, ArgumentParser] = {}
        groups = parser.add_subparsers(dest="group", required=True)

        # spectrum
        spectrum = groups.add_parser("spectrum", help="Generate spectra and their amplitudes")
        spectrum_actions = spectrum.add_subparsers(dest="action", required=True)

        generate = spectrum_actions.add_parser("gen", parents=[output], help="Generate a spectrum")
        generate.add_argument("--kind", dest="kind", choices=SPECTRUM_KINDS, help="The kind of spectrum")
        generate.add_argument("--d", dest="d", type=int, help="The number of atoms")
        generate.add_argument("--seed", dest="seed", type=int, help="The seed of random spectra")
        generate.add_argument("--scale", dest="scale", type=float, help="Multiplies every position")
        generate.add_argument("--path", dest="path", help="The file read by '--kind file'")

        amplitude = spectrum_actions.add_parser("amplitudes", parents=[output], help="Amplitudes of a measure")
        amplitude.add_argument("--measure", dest="measure", help="The measure file")
        amplitude.add_argument("--n-max", dest="n_max", type=int, help="The largest |n|")
        command_parsers.update({"spectrum gen": generate, "spectrum amplitudes": amplitude})

        # evolve
        evolve = groups.add_parser("evolve", help="Solve duality systems and recover spectra")
        evolve_actions = evolve.add_subparsers(dest="action", required=True)

        solve = evolve_actions.add_parser("solve", parents=[output], help="Build a scenario over a measure")
        solve.add_argument("--measure", dest="measure", help="The spectral measure")
        solve.add_argument("--order", dest="order", type=int, help="The order L")
        solve.add_argument(
            "--solver",
            dest="solver",
            type=_solver_name,
            choices=SOLVERS + (LINEAR_PROGRAM_SOLVER,),
            help="How the duality system is solved"
        )

        recover = evolve_actions.add_parser("recover", parents=[output], help="Recover a spectrum from amplitudes")
        recover.add_argument("--beta", dest="beta", help="The amplitude file")
        recover.add_argument("--d", dest="d", type=int, help="The number of atoms to recover")

        positivity = evolve_actions.add_parser("positivity", parents=[output], help="Sample the domain of positivity")
        positivity.add_argument("--d", dest="d", type=int, help="Atoms per sample")
        positivity.add_argument("--order", dest="order", type=int, help="The order L")
        positivity.add_argument("--trials", dest="trials", type=int, help="The number of samples")
        positivity.add_argument("--seed", dest="seed", type=int, help="The seed of the run")

        clustered = evolve_actions.add_parser("clustered", parents=[output], help="Positivity of clustered spectra")
        clustered.add_argument("--d", dest="d", type=int, help="Clusters around an equidistant core")
        clustered.add_argument("--order", dest="order", type=int, help="The order L")
        clustered.add_argument("--half-width", dest="half_width", type=float, help="Half of the width of a cluster")
        clustered.add_argument("--cluster-size", dest="cluster_size", type=int, help="Atoms per cluster")
        clustered.add_argument("--seed", dest="seed", type=int, help="Draw cluster atoms at random with this seed")
        command_parsers.update(
            {"evolve solve": solve, "evolve recover": recover, "evolve positivity": positivity, "evolve clustered": clustered}
        )

        # anticipate
        anticipate = groups.add_parser("anticipate", parents=[output], help="Anticipation amplitudes")
        anticipate.add_argument("--scenario", dest="scenario", help="A positive scenario")
        anticipate.add_argument("--raw", dest="raw", help="The raw measure the scenario was reduced from")
        anticipate.add_argument("--N", dest="N", type=int, help="The largest n")
        anticipate.add_argument(
            "--retrospective",
            dest="retrospective",
            action="store_true",
            default=None,
            help="Evaluate at -(n + ½)"
        )
        anticipate_actions = anticipate.add_subparsers(dest="action")
        command_parsers["anticipate"] = anticipate

        for name, help_text in (("model", "A model measure"), ("growth", "Look-ahead growth of a model measure")):
            model = anticipate_actions.add_parser(name, parents=[output], help=help_text)
            command_parsers[f"anticipate {name}"] = model
            model.add_argument("--kind", dest="kind", choices=MODEL_KINDS, help="The model measure")
            model.add_argument("--N", dest="N", type=int, help="The size of the grid")
            model.add_argument("--eps", dest="eps", type=float, help="The share of the grid a cluster covers")
            model.add_argument("--c", dest="c", type=float, help="The scale of the profile")

            if name == "model":
                model.add_argument("--L", dest="L", type=int, help="The order")
                model.add_argument("--M", dest="M", type=int, help="Atoms per cluster; round(eps·N) by default")

        # invert
        invert = groups.add_parser("invert", help="Fourier inversion of amplitudes")
        invert_actions = invert.add_subparsers(dest="action", required=True)

        for name, help_text in (("nu", "Sample ν"), ("F", "Sample ν and F"), ("peaks", "Locate atoms")):
            action = invert_actions.add_parser(name, parents=[output], help=help_text)
            command_parsers[f"invert {name}"] = action
            action.add_argument("--beta", dest="beta", help="The amplitude file")
            action.add_argument("--N", dest="N", type=int, help="The truncation")

            if name == "peaks":
                action.add_argument("--resolution", dest="resolution", type=float, help="Smallest distance of atoms")
                action.add_argument("--min-mass", dest="min_mass", type=float, help="The lightest atom to look for")
            else:
                action.add_argument(
                    "--smoothing",
                    dest="smoothing",
                    choices=SMOOTHINGS,
                    help="Partial sums or their Cesàro means"
                )
                action.add_argument("--grid", dest="grid", type=int, help="Points of the uniform grid")
                action.add_argument("--measure", dest="measure", help="Report the distance to this measure")

        # kernels
        kernel = groups.add_parser("delta-kernel", parents=[output], help="δ-kernel pairings")
        kernel.add_argument("--measure", dest="measure", help="The measure")
        kernel.add_argument("--alpha", dest="alpha", type=float, help="The scaling exponent")
        kernel.add_argument("--N-list", dest="N_list", type=parse_number_list, help="Comma separated N")
        kernel.add_argument("--phi", dest="phi", choices=tuple(TEST_FUNCTIONS), help="The test function φ")
        kernel.add_argument("--psi", dest="psi", choices=tuple(TEST_FUNCTIONS), help="The test function Ψ")
        kernel.add_argument("--pairing", dest="pairing", choices=tuple(PAIRINGS), help="The paired kernel")
        kernel.add_argument("--target", dest="target", type=float, help="The expected limit")

        average = groups.add_parser("time-average", parents=[output], help="Time average of the return probability")
        average.add_argument("--measure", dest="measure", help="The measure")
        average.add_argument("--alpha", dest="alpha", type=float, help="The scaling exponent")
        average.add_argument("--T", dest="T", type=float, help="The length of the time window")
        average.add_argument("--dt", dest="dt", type=float, help="The starting quadrature step")
        average.add_argument("--tolerance", dest="tolerance", type=float, help="The accepted step halving error")

        selftest = groups.add_parser("selftest", parents=[output], help="Run the acceptance suite")
        selftest.add_argument("--quick", dest="quick", action="store_true", help="Cut the trial counts")

        command_parsers.update({"delta-kernel": kernel, "time-average": average, "selftest": selftest})

        # Parse the list of args if one is passed instead of args passed to the script
        if args:
            parameters = parser.parse_args(args)
        else:
            parameters = parser.parse_args()

        values = {key: value for key, value in vars(parameters).items() if value is not None}
        group = values.pop("group")
        action = values.pop("action", None)

        self.__command = group if action is None else f"{group} {action}"
        missing = missing_flags(self.__command, values)
        if missing:
            # exits with the usage of the subcommand
            command_parsers.get(self.__command, parser).error(
                f"the following arguments are required: {', '.join(missing)}"
            )

        self.__verbose = values.get("verbose", False)
        self.__configuration = RunConfig(command=self.__command, **values)


def main(argv: typing.Sequence[str] = None) -> int:
    """
    Run one command

    Returns:
        0 on success, 1 when the toolkit rejected the input or a result broke a guarantee, 2 on usage errors
    """
    try:
        arguments = Arguments(*argv) if argv else Arguments()
    except SystemExit as exit_request:
        return EXIT_USAGE if exit_request.code else EXIT_SUCCESS
    except ValidationError as error:
        logging.error(f"The arguments were rejected: {error}")
        return EXIT_FAILURE

    if arguments.verbose:
        logging.set_level("DEBUG")

    handler = get_command_handlers().get(arguments.command)

    if handler is None:
        logging.error(f"No handler is registered for '{arguments.command}'")
        return EXIT_USAGE

    run_log = logging.get_logger(command=arguments.command)
    run_log.debug({"configuration": arguments.configuration.dict(exclude_none=True)})

    try:
        return handler(arguments.configuration)
    except (AnticipationLabError, ValidationError) as error:
        run_log.error({"failure": type(error).__name__, "reason": str(error)})
        return EXIT_FAILURE


if __name__ == "__main__":
    import sys
    sys.exit(main())

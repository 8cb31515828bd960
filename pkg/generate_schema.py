#!/usr/bin/env python3
"""
Writes json schemas for the documents that anticipation-lab reads and writes

Input documents (measures, amplitudes, scenarios) are always included; `--outputs` adds every report
document a command can produce.
"""
import os
import sys
import json
import pathlib
import typing

from argparse import ArgumentParser

from anticipation_lab import documents
from anticipation_lab.utilities.common import write_text_atomically

DEFAULT_SCHEMA_PATH = os.environ.get("ANTICIPATION_LAB_SCHEMA_PATH", "schema.json")

INPUT_DOCUMENTS: typing.Mapping[str, typing.Type[documents.ParseableModel]] = {
    "measure": documents.MeasureDocument,
    "amplitudes": documents.AmplitudeDocument,
    "scenario": documents.ScenarioDocument,
}

OUTPUT_DOCUMENTS: typing.Mapping[str, typing.Type[documents.ParseableModel]] = {
    "recovered_spectrum": documents.RecoveredSpectrumDocument,
    "anticipation": documents.AnticipationDocument,
    "model_measure": documents.ModelMeasureDocument,
    "inversion": documents.InversionDocument,
    "point_spectrum": documents.PointSpectrumDocument,
    "convergence": documents.ConvergenceDocument,
    "time_average": documents.TimeAverageDocument,
    "selftest": documents.SelfTestDocument,
}


class Arguments(object):
    def __init__(self, *args):
        self.__path: typing.Optional[pathlib.Path] = None
        self.__pipe: bool = False
        self.__outputs: bool = False
        self.__only: typing.Optional[str] = None

        self.__parse_command_line(*args)

    @property
    def path(self) -> pathlib.Path:
        return self.__path

    @property
    def pipe(self) -> bool:
        return self.__pipe

    @property
    def outputs(self) -> bool:
        return self.__outputs

    @property
    def only(self) -> typing.Optional[str]:
        return self.__only

    def __parse_command_line(self, *args):
        parser = ArgumentParser("Write anticipation-lab document schemas")

        parser.add_argument(
            "-p",
            metavar="path",
            dest="path",
            type=str,
            default=DEFAULT_SCHEMA_PATH,
            help="Where to write the schemas. A directory receives 'schema.json'"
        )
        parser.add_argument("--pipe", dest="pipe", action="store_true", help="Print the schemas instead")
        parser.add_argument(
            "--outputs",
            dest="outputs",
            action="store_true",
            help="Include the report documents written by each command"
        )
        parser.add_argument(
            "--only",
            dest="only",
            choices=sorted({**INPUT_DOCUMENTS, **OUTPUT_DOCUMENTS}),
            help="Write the schema of a single document"
        )

        parameters = parser.parse_args(args or None)

        path = pathlib.Path(parameters.path)
        self.__path = (path / "schema.json" if path.is_dir() else path).resolve()
        self.__pipe = parameters.pipe
        self.__outputs = parameters.outputs
        self.__only = parameters.only


def document_schemas(include_outputs: bool = False, only: str = None) -> typing.Dict[str, dict]:
    """
    Map document names to their json schema

    Args:
        include_outputs: Whether report documents are included alongside the input documents
        only: The name of a single document to describe

    Returns:
        Schemas keyed by document name
    """
    selected = dict(INPUT_DOCUMENTS)

    if include_outputs or only:
        selected.update(OUTPUT_DOCUMENTS)

    if only:
        selected = {only: selected[only]}

    return {name: model.schema() for name, model in selected.items()}


def main(*args) -> int:
    arguments = Arguments(*args)
    text = json.dumps(document_schemas(arguments.outputs, arguments.only), indent=4)

    if arguments.pipe:
        print(text, file=sys.stdout)
    else:
        written = write_text_atomically(arguments.path, text + "\n")
        print(f"Schemas were written to {written}", file=sys.stderr)

    return 0


if __name__ == "__main__":
    sys.exit(main())

"""
Automatically generated documentation for settings.
"""

import argparse
import os
import sys

ROOT = os.path.dirname(os.path.realpath(__file__))

# Using list instead of dict because order matters.
PROP_ATTRS = [
    ("name", "Name"),
    ("desc", "Description"),
    ("default", "Default"),
    ("min", "Minimum"),
    ("max", "Maximum"),
    ("choices", "Choices"),
    ("pattern", "Pattern"),
]


def write_header(fp):
    fp.write("Settings\n========\n\n"
        "Automatically generated settings docs. Override any of them with\n"
        "``umt --limit group.key=value``.\n\n")


def doc_prop(fp, pgroup_idname, idname, prop):
    fp.write(f"- ``{pgroup_idname}.{idname}``: "
        f":class:`~umt.config.{type(prop).__name__}`\n")

    for attr, name in PROP_ATTRS:
        v = getattr(prop, attr, None)
        if v is None:
            continue
        if attr not in ("name", "desc"):
            v = "``" + str(v) + "``"
        fp.write(f"   :{name}: {v}\n")


def doc_pgroup(fp, name, idname, annotations):
    fp.write("{}\n{}\n\n".format(name, "-"*len(name)))

    for prop_id, prop in annotations.items():
        doc_prop(fp, idname, prop_id, prop)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("-o", "--output", help="Output RST file.",
        default=os.path.join(os.path.dirname(ROOT), "docs", "manual",
            "settings.rst"))
    args = parser.parse_args()

    sys.path.insert(0, os.path.dirname(ROOT))

    from umt.config import DefaultSettings

    with open(args.output, "w") as fp:
        write_header(fp)

        for key in sorted(DefaultSettings._pgroups.keys()):
            cls = DefaultSettings._pgroups[key]
            doc_pgroup(fp, cls.__name__, key, cls.__annotations__)
            fp.write("\n")


if __name__ == "__main__":
    main()

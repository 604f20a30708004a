"""Regenerates the mutation documents from the valid ones.

Each mutation exports a valid document in explicit form, changes one entry
and writes the result next to this script. Usage: generate.py <xhopf binary>
"""
import json
import pathlib
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent
DOCS = HERE.parent

# (output, source document, target to verify, path to the entry, new value)
MUTATIONS = [
    ("coproduct_entry", "k_xi_z2", "k_xi_z2", ["hopf", "k_xi_z2", "coproduct", 1, 1, 0, 0], "2"),
    ("phi_entry", "bichar_z2", "bichar_z2", ["hopf", "bichar_z2", "phi", 0, 1, 1, 1], "2"),
    ("antipode_entry", "sign_twisted_z2", "twisted", ["hopf", "twisted", "antipode", 1, 0, 0], "-1"),
    ("crossed_module_action", "a3_in_s3", "a3", ["crossed_modules", "a3", "action", 3, 1], 2),
    ("group_table", "k_xi_z2", "E", ["groups", "E", "table", 1, 1], 1),
    ("module_action", "bichar_z2", "regular", ["modules", "regular", "action", 0, 1, 0], "1"),
    ("hopf_module_coaction", "k_xi_z2", "free2", ["hopf_modules", "free2", "coaction", 0, 1, 0, 1], "1"),
    ("grouplike_family", "bichar_z2", "g", ["grouplikes", "g", "family", 0, 1], "2"),
    ("integral_lambda", "bichar_z2", "sum", ["integrals", "sum", "lambda", 0, 1], "1"),
    ("algebra_product", "bichar_z2", "bichar_z2_dual", ["hopf_algebras", "bichar_z2_dual", "product", 0, 0, 1, 0], "1"),
]


def main() -> None:
    tool = sys.argv[1]
    manifest = []
    for name, source, target, path, value in MUTATIONS:
        text = subprocess.run([tool, "export", "-i", str(DOCS / f"{source}.json")],
                              check=True, capture_output=True, text=True).stdout
        doc = json.loads(text)
        node = doc
        for key in path[:-1]:
            node = node[key]
        if node[path[-1]] == value:
            raise SystemExit(f"{name}: mutation leaves the entry unchanged")
        node[path[-1]] = value
        doc = {"description": f"{source} with /{'/'.join(map(str, path))} set to {value}", **doc}
        (HERE / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        manifest.append(f"{name}.json {target}")
    (HERE / "manifest.txt").write_text("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()

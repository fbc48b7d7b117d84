"""Report assembly and serialization (text, json, csv).

The json form is the machine format: from_json(to_json(r)) == r.  The
csv form is a fixed-order flat projection with the same round-trip
property on its own field set.  Infinite lengths serialize as the
string "INFINITE" in both machine formats.
"""

import json

from .poly import INFINITE

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "type": "object",
    "required": ["ring", "module", "lengths", "multiplicity", "chi", "verdicts", "telemetry"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "ring": {
            "type": "object",
            "required": ["p", "vars", "ideal", "dim"],
            "additionalProperties": False,
            "properties": {
                "p": {"type": "integer"},
                "vars": {"type": "array", "items": {"type": "string"}},
                "ideal": {"type": "array", "items": {"type": "string"}},
                "dim": {"type": "integer"},
            },
        },
        "module": {
            "type": "object",
            "required": ["r", "n", "matrix"],
            "additionalProperties": False,
            "properties": {
                "r": {"type": "integer"},
                "n": {"type": "integer"},
                "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
            },
        },
        "lengths": {
            "type": "object",
            "required": ["F_mod_N", "A_mod_IN"],
            "additionalProperties": False,
            "properties": {
                "F_mod_N": {"oneOf": [{"type": "integer"}, {"const": "INFINITE"}]},
                "A_mod_IN": {"oneOf": [{"type": "integer"}, {"const": "INFINITE"}]},
            },
        },
        "multiplicity": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["e0", "coefficients", "lambda_table"],
                    "additionalProperties": False,
                    "properties": {
                        "e0": {"type": "integer"},
                        "coefficients": {"type": "array", "items": {"type": "integer"}},
                        # lambda_table[i] = length for symmetric power i+1
                        "lambda_table": {"type": "array", "items": {"type": "integer"}},
                    },
                },
            ]
        },
        "chi": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["per_t"],
                    "additionalProperties": False,
                    "properties": {
                        "per_t": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "required": ["t", "H_lengths", "chi_q"],
                                "additionalProperties": False,
                                "properties": {
                                    "t": {"type": "integer"},
                                    "H_lengths": {"type": "array", "items": {"type": "integer"}},
                                    "chi_q": {"type": "array", "items": {"type": "integer"}},
                                },
                            },
                        }
                    },
                },
            ]
        },
        "verdicts": {
            "type": "object",
            "additionalProperties": {"type": ["boolean", "null"]},
        },
        "telemetry": {
            "type": "object",
            "required": ["elapsed_ms", "gb_pairs"],
            "additionalProperties": False,
            "properties": {
                "elapsed_ms": {"type": "integer"},
                "gb_pairs": {"type": "integer"},
            },
        },
    },
}


def _len_json(v):
    return "INFINITE" if v is INFINITE else v


def build_report(rep, elapsed_ms, gb_pairs):
    """Plain-data report dict for one analyzed instance."""
    ring = rep.ring
    mat = rep.matrix
    body = {
        "schema": SCHEMA_VERSION,
        "ring": {
            "p": ring.p,
            "vars": list(ring.names),
            "ideal": [str(g) for g in ring.ideal_gens],
            "dim": ring.dimension,
        },
        "module": {
            "r": mat.r,
            "n": mat.n,
            "matrix": [[str(e) for e in row] for row in mat.entries],
        },
        "lengths": {
            "F_mod_N": _len_json(rep.len_f_mod_n),
            "A_mod_IN": _len_json(rep.len_a_mod_in),
        },
        "multiplicity": None,
        "chi": None,
        "verdicts": dict(rep.verdicts),
        "telemetry": {"elapsed_ms": int(elapsed_ms), "gb_pairs": int(gb_pairs)},
    }
    if rep.table is not None:
        body["multiplicity"] = {
            "e0": rep.table.e0,
            "coefficients": list(rep.table.coefficients),
            "lambda_table": list(rep.table.values),
        }
    if rep.chi_rows:
        body["chi"] = {
            "per_t": [
                {"t": row.t, "H_lengths": list(row.h_lengths), "chi_q": list(row.chis)}
                for row in rep.chi_rows
            ]
        }
    return body


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def from_json(text):
    return json.loads(text)


def render_text(report):
    lines = []
    ring = report["ring"]
    quot = " / (%s)" % ", ".join(ring["ideal"]) if ring["ideal"] else ""
    lines.append("ring        F_%d[%s]%s   dim %d" % (ring["p"], ", ".join(ring["vars"]), quot, ring["dim"]))
    mod = report["module"]
    lines.append("module      rank %d, %d columns" % (mod["r"], mod["n"]))
    lines.append("matrix      %s" % "; ".join("[" + ", ".join(row) + "]" for row in mod["matrix"]))
    lens = report["lengths"]
    lines.append("lengths     l(F/N) = %s   l(A/I(N)) = %s" % (lens["F_mod_N"], lens["A_mod_IN"]))
    mult = report["multiplicity"]
    if mult is None:
        lines.append("e-vector    (none: infinite colength)")
    else:
        lines.append("lambda      %s" % " ".join(str(v) for v in mult["lambda_table"]))
        lines.append("e-vector    (%s)   e_0 = %d" % (", ".join(str(c) for c in mult["coefficients"]), mult["e0"]))
    if report["chi"] is not None:
        for i, row in enumerate(report["chi"]["per_t"]):
            head = "chi         " if i == 0 else "            "
            lines.append("%st=%d: H = (%s)  chi = (%s)" % (
                head, row["t"],
                ", ".join(str(v) for v in row["H_lengths"]),
                ", ".join(str(v) for v in row["chi_q"]),
            ))
    verd = report["verdicts"]
    shown = []
    for key in sorted(verd):
        val = verd[key]
        shown.append("%s=%s" % (key, "yes" if val is True else "NO" if val is False else "n/a"))
    lines.append("verdicts    " + " ".join(shown))
    tele = report["telemetry"]
    lines.append("telemetry   %d ms, %d pairs" % (tele["elapsed_ms"], tele["gb_pairs"]))
    return "\n".join(lines) + "\n"


CSV_COLUMNS = (
    "p", "vars", "ideal", "dim", "r", "n", "matrix",
    "len_F_mod_N", "len_A_mod_IN", "e0", "coefficients", "lambda",
    "chi0", "parameter", "elapsed_ms", "gb_pairs",
)


def to_csv(report):
    """Header line plus one fixed-order row for this report."""
    mult = report["multiplicity"]
    chi = report["chi"]
    chi0 = ""
    if chi is not None and chi["per_t"]:
        chi0s = {row["chi_q"][0] for row in chi["per_t"]}
        chi0 = str(min(chi0s)) if len(chi0s) == 1 else "ambiguous"
    param = report["verdicts"].get("parameter_module")
    row = (
        str(report["ring"]["p"]),
        " ".join(report["ring"]["vars"]),
        "; ".join(report["ring"]["ideal"]),
        str(report["ring"]["dim"]),
        str(report["module"]["r"]),
        str(report["module"]["n"]),
        "; ".join(", ".join(r) for r in report["module"]["matrix"]),
        str(report["lengths"]["F_mod_N"]),
        str(report["lengths"]["A_mod_IN"]),
        "" if mult is None else str(mult["e0"]),
        "" if mult is None else " ".join(str(c) for c in mult["coefficients"]),
        "" if mult is None else " ".join(str(v) for v in mult["lambda_table"]),
        chi0,
        "" if param is None else str(bool(param)).lower(),
        str(report["telemetry"]["elapsed_ms"]),
        str(report["telemetry"]["gb_pairs"]),
    )
    assert len(row) == len(CSV_COLUMNS)
    out = []
    for line in (CSV_COLUMNS, row):
        cells = []
        for cell in line:
            if any(ch in cell for ch in ',"\n'):
                cell = '"' + cell.replace('"', '""') + '"'
            cells.append(cell)
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def from_csv(text):
    """Flat dict keyed by CSV_COLUMNS from a to_csv document."""
    import csv as _csv
    import io

    rows = list(_csv.reader(io.StringIO(text)))
    assert len(rows) == 2 and tuple(rows[0]) == CSV_COLUMNS
    return dict(zip(CSV_COLUMNS, rows[1]))


def csv_projection(report):
    """The same flat dict to_csv writes, straight from a report."""
    doc = to_csv(report)
    return from_csv(doc)


def render_spread_text(result, ring_line):
    lines = ["ring        %s" % ring_line,
             "seed        %d" % result.seed,
             "samples     %d" % len(result.samples),
             "differences %s" % " ".join(str(d) for d in result.differences)]
    hist = {}
    for d in result.differences:
        hist[d] = hist.get(d, 0) + 1
    for d in sorted(hist):
        lines.append("  diff %d: %s (%d)" % (d, "#" * hist[d], hist[d]))
    for s in result.samples:
        lines.append("  %s  colength %d  e0 %d" % (s.matrix_text, s.colength, s.e0))
    return "\n".join(lines) + "\n"


def spread_json(result, ring_report):
    hist = {}
    for d in result.differences:
        hist[str(d)] = hist.get(str(d), 0) + 1
    return {
        "schema": SCHEMA_VERSION,
        "ring": ring_report,
        "seed": result.seed,
        "entry_degree": result.entry_degree,
        "differences": list(result.differences),
        "histogram": hist,
        "samples": [
            {"matrix": s.matrix_text, "colength": s.colength, "e0": s.e0}
            for s in result.samples
        ],
    }

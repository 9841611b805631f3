"""Regenerate the JSON documents under fixtures/ from the named examples."""

import json
import sys
from pathlib import Path

from apnkit.bialgebra.factorizable import double_bialgebra, semidirect_rb_quadratic
from apnkit.bialgebra.coalgebra import zero_cobracket
from apnkit.cli.documents import (apn_json, cobracket_json, dumps, matrix_json, novikov_json,
                                  save, sparse_json)
from apnkit.exactlin import Field
from apnkit.fixtures import a2, a3, n2, onedim, worked_example, worked_T
from apnkit.matched_pair import split_apn

Q = Field.rational()
OUT = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "fixtures")


def write(name, doc):
    (OUT / name).write_text(dumps(doc))


def main():
    OUT.mkdir(exist_ok=True)
    write("a3.json", save(a3(Q)))
    write("onedim_p1_q1.json", save(onedim(Q, 1, 1)))
    write("onedim_p2_qm1.json", save(onedim(Q, 2, -1)))

    doc = novikov_json(n2(Q))
    doc["params"] = {"a": "1"}
    doc["T"] = [["0", "0"], ["a", "0"]]
    write("n2.json", doc)

    doc = apn_json(a2(Q))
    doc["ops"]["succ"] = [[0, 0, 1, "a"]]
    doc["params"] = {"a": "1"}
    doc["T"] = matrix_json(Q, worked_T(Q))
    write("a2.json", doc)

    hat, s, delta = worked_example(Q)
    doc = apn_json(hat)
    doc["s"] = sparse_json(Q, s)
    doc["cobracket"] = cobracket_json(delta)
    write("worked.json", doc)

    write("matched_pair.json", save(split_apn(hat, 2)))

    for name, (A, d) in {"double.json": (hat, delta),
                         "double_a3.json": (a3(Q), zero_cobracket(Q, 3))}.items():
        Db = double_bialgebra(A, d)
        doc = apn_json(Db.algebra)
        doc["s"] = sparse_json(Q, Db.s)
        doc["cobracket"] = cobracket_json(Db.delta)
        write(name, doc)

    P = Q.array([[-1, 0], [1, -1]])
    D, w, Phat, s = semidirect_rb_quadratic(a2(Q), P, 1)
    doc = apn_json(D)
    doc.update(P=matrix_json(Q, Phat), omega=matrix_json(Q, w), weight="1")
    write("rb_quadratic.json", doc)

    print(json.dumps(sorted(p.name for p in OUT.glob("*.json"))))


if __name__ == "__main__":
    main()

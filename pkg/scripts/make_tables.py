"""Write the P2 x E correlator table to src/qjacobi/data/p2xe.json."""
import json
from pathlib import Path

from qjacobi.ring import G, MeroQJac, derived_derivative

OUT = Path(__file__).resolve().parents[1] / "src" / "qjacobi" / "data"


def Dt(f):
    return derived_derivative(f, "D_tau")


def Dp(f):
    return derived_derivative(f, "D_p")


def ins(k, cls, n=1):
    return [{"kind": "ch", "k": k, "class": cls}] * n


def p2xe_entries():
    th = G["Theta"]
    dt = Dt(th)
    rows = [
        (1, ins(2, "H^2*p") + ins(2, "H^2"), th),
        (1, ins(2, "H^2*p") + ins(2, "H*p"), dt * 3),
        (1, ins(2, "H*p", 2) + ins(2, "H^2"), dt * 4),
        (1, ins(2, "H*p", 3), MeroQJac(Dt(dt) * 3) + MeroQJac(dt * dt * 9, 1)),
        (1, ins(3, "H^2*p"), th * G["A"]),
        (1, ins(2, "H^2*p") + ins(2, "H*alpha") + ins(2, "H*beta"), dt),
        (2, ins(2, "H^2*p") + ins(2, "H^2", 4), th ** 4),
        (2, ins(2, "H^2*p", 3),
         th ** 3 * Dp(Dp(dt)) * 3 + th ** 2 * Dp(Dp(th)) * dt * 3
         - th ** 2 * Dp(dt) * Dp(th) * 6 + th ** 2 * dt * dt * 3),
        (2, ins(2, "H^2*p", 2) + ins(3, "H^2"), th ** 3 * Dp(dt) * 2),
    ]
    return [{"beta": b, "insertions": i, "value": MeroQJac.of(v).to_json()} for b, i, v in rows]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "p2xe.json").write_text(json.dumps(
        {"geometry": "P2xE", "entries": p2xe_entries()}, indent=1) + "\n")


if __name__ == "__main__":
    main()

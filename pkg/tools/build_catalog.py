"""Build src/superqf/data/catalog.json from the compact transcription below.

Run from the repository root:  python3 tools/build_catalog.py

Notation used in the tables:
  brackets / products   "[e1,e3]=e3; [e2,e4]=p*e3 - q*e4"   /   "e1.e3=e3; ..."
  forms                 "e3^e1 + e4^e2"   (coefficient*ei^ej means c ei* wedge ej*)
  extension pairs       "e2 = -Pi(e4*)"   (catalog vector = extension vector)
"""
from __future__ import annotations

import re
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from superqf import catalog as cat  # noqa: E402
from superqf import linalg  # noqa: E402
from superqf.scalar import ZERO, parse_scalar  # noqa: E402

OUT = ROOT / "src" / "superqf" / "data" / "catalog.json"
PARAMS = ["p", "q", "lambda", "gamma", "mu", "nu", "delta"]

_LABEL = r"(?:Pi\([A-Za-z0-9]+\*\)|[A-Za-z][A-Za-z0-9]*\*?(?:\^[A-Za-z][A-Za-z0-9]*)?)"


def _split_terms(text):
    """Split at top-level + and - signs, keeping the sign with the term."""
    terms, depth, cur = [], 0, ""
    for ch in text.replace(" ", ""):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and cur[-1] not in "*/":
            terms.append(cur)
            cur = ""
        cur += ch
    if cur:
        terms.append(cur)
    return terms


def lin(text):
    """'p*e3 - q*e4' -> {'e3': 'p', 'e4': '-q'} (canonical scalar strings)."""
    out = {}
    for t in _split_terms(text):
        m = re.fullmatch(rf"([+-]?)(?:(.*)\*)?({_LABEL})", t)
        if not m:
            raise ValueError(f"cannot read term {t!r} in {text!r}")
        sgn, coeff, label = m.groups()
        c = parse_scalar(coeff) if coeff else parse_scalar("1")
        if sgn == "-":
            c = -c
        out[label] = out.get(label, ZERO) + c
    return {k: str(v) for k, v in out.items() if v}


def relations(text, sep):
    """'[e1,e3]=e3; ...' or 'e1.e3=e3; ...' -> list of (i, j, rhs)."""
    out = []
    for part in filter(None, (x.strip() for x in text.split(";"))):
        lhs, rhs = part.split("=", 1)
        if sep == "[":
            i, j = lhs.strip()[1:-1].split(",")
        else:
            i, j = lhs.split(".")
        out.append((i.strip(), j.strip(), lin(rhs)))
    return out


def brackets_json(text):
    return [{"i": i, "j": j, "rhs": rhs} for i, j, rhs in relations(text, "[")]


def products_json(text):
    return [{"i": i, "j": j, "result": rhs} for i, j, rhs in relations(text, ".")]


def form_terms(text):
    out = []
    for lab, c in lin(text).items():
        i, j = lab.split("^")
        out.append({"coeff": c, "i": i, "j": j})
    return out


def region(params="", constraints="", samples=()):
    """constraints: 'p*q != 0; p-q >= 0' ; samples: list of 'p=2,q=1' strings."""
    names = params.split() if params else []
    cons = []
    for c in filter(None, (x.strip() for x in constraints.split(";"))):
        m = re.fullmatch(r"(.*?)\s*(!=|>=|<=|>|<|=)\s*0", c)
        poly, rel = m.groups()
        cons.append({"poly": str(parse_scalar(poly)), "rel": rel})
    pts = []
    for s in samples:
        pt = dict(kv.split("=") for kv in s.replace(" ", "").split(",")) if s else {}
        pts.append({k: str(Fraction(pt[k])) for k in names})
    return {"parameters": names, "constraints": cons, "samples": pts}


def merge_regions(base, extra):
    """Region on base.parameters + extra.parameters; samples zipped cyclically."""
    names = base["parameters"] + [n for n in extra["parameters"] if n not in base["parameters"]]
    a = base["samples"] or [{}]
    b = extra["samples"] or [{}]
    n = max(len(a), len(b))
    pts = [{**a[k % len(a)], **b[k % len(b)]} for k in range(n)] if names else []
    return {"parameters": names, "constraints": base["constraints"] + extra["constraints"], "samples": pts}


# ---------------------------------------------------------------------------
# extension blocks
# ---------------------------------------------------------------------------

def extension(kind, form, base, brackets, nabla, pairs, cocycle=()):
    """base: 'e1|e4' (even | odd) or 'e1,e2' (all even) or ',e3,e4' style via '|'.

    nabla: '(e1,e1)=-e1; (e1,e4)=-p*e4'.
    pairs: catalog = extension identifications; the base labels that are
    catalog vectors are given as 'x = e3 - e4' entries too.
    cocycle: list of (value, form) strings.
    """
    even, _, odd = base.partition("|")
    labels = [x for x in even.split(",") if x] + [x for x in odd.split(",") if x]
    parities = [0] * len([x for x in even.split(",") if x]) + [1] * len([x for x in odd.split(",") if x])
    conn = []
    for part in filter(None, (x.strip() for x in nabla.split(";"))):
        lhs, rhs = part.split("=", 1)
        i, j = lhs.strip()[1:-1].split(",")
        for k, c in lin(rhs).items():
            conn.append({"i": i.strip(), "j": j.strip(), "k": k, "coeff": c})
    if kind == "t-star":
        module = [f"{x}*" for x in labels]
    else:
        module = [f"Pi({x}*)" for x in labels]
    ext_labels = labels + module
    # each pair "catalog = extension" gives one linear relation
    cat_rows, ext_rows = [], []
    for part in pairs.split(";"):
        lhs, rhs = part.split("=", 1)
        cvec, evec = lin(lhs), lin(rhs)
        if all(k in ext_labels for k in cvec) and not all(k in cat.LABELS for k in cvec):
            cvec, evec = evec, cvec
        cat_rows.append([parse_scalar(cvec.get(x, "0")) for x in cat.LABELS])
        ext_rows.append([parse_scalar(evec.get(x, "0")) for x in ext_labels])
    # identification row r = catalog coordinates of extension basis vector r
    inv = linalg.inverse(ext_rows)
    ident = [[sum((inv[r][k] * cat_rows[k][c] for k in range(len(ext_rows))), ZERO)
              for c in range(4)] for r in range(len(ext_rows))]
    n = len(labels)
    return {
        "kind": kind,
        "form": form,
        "base_basis": {"labels": labels, "parities": parities},
        "base_brackets": brackets_json(brackets),
        "connection": conn,
        "cocycle": {
            "kind": "even-alpha" if kind == "t-star" else "odd-beta",
            "terms": [{"value": lin(v), "form": form_terms(f)} for v, f in cocycle],
        },
        "identification": [[str(x) for x in row] for row in ident],
        "ideal": [[str(x) for x in row] for row in ident[n:]],
        "complement": [[str(x) for x in row] for row in ident[:n]],
    }


# ---------------------------------------------------------------------------
# the transcription
# ---------------------------------------------------------------------------

ENTRIES = []


def entry(eid, name, table, brackets, reg=None, cases=(), lsa=()):
    ENTRIES.append({
        "id": eid,
        "name": name,
        "table": table,
        "sdim": [cat.TABLE_PARITIES[table].count(0), cat.TABLE_PARITIES[table].count(1)],
        "brackets": brackets_json(brackets),
        "region": reg or region(),
        "cases": list(cases),
        "lsa": list(lsa),
    })


def case(item, category, verdict, reg=None, forms=(), extensions=(), certificate=None):
    return {
        "item": item,
        "category": category,
        "verdict": verdict,
        "region": reg or region(),
        "forms": list(forms),
        "extensions": list(extensions),
        "no_lagrangian_certificate": certificate,
    }


def form(parity, terms, reg=None):
    return {"parity": parity, "terms": form_terms(terms), "region": reg or region()}


def lsa(kind, products, free=""):
    return {"kind": kind, "free": free.split(), "products": products_json(products)}


def both(products, free=""):
    """A table stated to be Novikov and also Balinsky-Novikov."""
    return [lsa("novikov", products, free), lsa("bn", products, free)]


def not_qf(item, reg=None):
    return case(item, "not-qf", "none", reg)


def nh(item, terms, reg):
    return case(item, "nh", "NH-only", reg, [form("nh", terms, reg)])


# ---- Table 1: trivial, sdim 2|2 --------------------------------------------

entry("D5", "D^5", 1, "[e1,e3]=e3; [e1,e4]=e4; [e2,e4]=e3",
      cases=[case(1, "constructive", "odd", forms=[form("1", "e3^e1 + e4^e2")], extensions=[
          extension("pi-t-star", 0, "e1|e4", "[e1,e4]=e4", "(e4,e1)=-e4; (e1,e1)=-e1",
                    "e1 = e1; e4 = e4; e2 = -Pi(e4*); e3 = Pi(e1*)")])],
      lsa=both("e1.e3=e3; e1.e4=e4; e2.e4=e3"))

entry("D6", "D^6", 1, "[e1,e3]=e3; [e1,e4]=e4; [e2,e3]=-e4; [e2,e4]=e3",
      cases=[case(2, "constructive", "odd", forms=[form("1", "e3^e1 + e4^e2")], extensions=[
          extension("pi-t-star", 0, "e1,e2", "", "(e1,e1)=-e1; (e1,e2)=-e2; (e2,e1)=-e2; (e2,e2)=e1",
                    "e1 = e1; e2 = e2; e3 = Pi(e1*); e4 = Pi(e2*)")])],
      lsa=both("e1.e3=e3; e1.e4=e4; e2.e3=-e4; e2.e4=e3"))

D7_REGION = region("p q", "p*q != 0; p-q >= 0; p+1 != 0; q+1 != 0; p+q != 0",
                   ["p=2,q=1", "p=1,q=1", "p=3,q=-2", "p=1/2,q=-1/3"])
entry("D7_pq", "D^7_{pq}", 1, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=q*e4", D7_REGION,
      cases=[not_qf(3, D7_REGION)],
      lsa=both("e1.e1=gamma*e2; e1.e2=e2; e1.e3=p*e3; e1.e4=q*e4", "gamma"))

R = region("q", "q+1 <= 0", ["q=-1", "q=-2", "q=-3/2"])
entry("D7_-1q", "D^7_{-1q}", 1, "[e1,e2]=e2; [e1,e3]=-e3; [e1,e4]=q*e4", R,
      cases=[case(4, "constructive", "odd", R, [form("1", "e4^e1 + e3^e2", R)], [
          extension("pi-t-star", 0, "e1,e2", "[e1,e2]=e2", "(e1,e1)=-q*e1; (e1,e2)=e2",
                    "e1 = e1; e2 = e2; e4 = Pi(e1*); e3 = Pi(e2*)")])])

R = region("p", "p != 0; p-1 != 0", ["p=2", "p=1/2", "p=3"])
entry("D7_p-p", "D^7_{pp}", 1, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=-p*e4", R,
      cases=[case(5, "constructive", "even", R, [form("0", "e2^e1 - e3^e4", R)], [
          extension("t-star", 0, "e1|e4", "[e1,e4]=-p*e4", "(e1,e1)=-e1; (e1,e4)=-p*e4",
                    "e1 = e1; e4 = e4; e2 = e1*; e3 = e4*")])])

entry("D7_1-1", "D^7_{pq}, p=-q, q=-1", 1, "[e1,e2]=e2; [e1,e3]=e3; [e1,e4]=-e4",
      cases=[case(6, "constructive", "both",
                  forms=[form("0", "e2^e1 - e3^e4"), form("1", "e3^e1 + e4^e2")], extensions=[
          extension("pi-t-star", 1, "e1,e2", "[e1,e2]=e2", "(e1,e1)=-e1; (e1,e2)=e2",
                    "e1 = e1; e2 = e2; e3 = Pi(e1*); e4 = Pi(e2*)"),
          extension("t-star", 0, "e1|e4", "[e1,e4]=-e4", "(e1,e1)=-e1; (e1,e4)=-e4",
                    "e1 = e1; e4 = e4; e2 = e1*; e3 = e4*")])])

R = region("p", "p != 0; p+1 != 0", ["p=1", "p=2", "p=-1/2"])
entry("D8_p", "D^8_p", 1, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=e3 + p*e4", R,
      cases=[not_qf(7, R)],
      lsa=both("e1.e1=gamma*e2; e1.e2=e2; e1.e3=p*e3; e1.e4=e3 + p*e4", "gamma"))

entry("D8_-1", "D^8_{-1}", 1, "[e1,e2]=e2; [e1,e3]=-e3; [e1,e4]=e3 - e4",
      cases=[case(8, "constructive", "odd", forms=[form("1", "e3^e1 + e4^e2")], extensions=[
          extension("pi-t-star", 0, "e1,e2", "[e1,e2]=e2", "(e1,e1)=e1 - e2; (e1,e2)=e2",
                    "e1 = e1; e2 = e2; e3 = Pi(e1*); e4 = Pi(e2*)")])])

R = region("p q", "q > 0", ["p=0,q=1", "p=1,q=2", "p=-1/2,q=1/3"])
entry("D9_pq", "D^9_{pq}", 1, "[e1,e3]=p*e3 - q*e4; [e1,e2]=e2; [e1,e4]=q*e3 + p*e4", R,
      cases=[not_qf(9, R)],
      lsa=[lsa("novikov", "e1.e1=gamma*e1; e1.e2=(1+gamma)*e2; e1.e3=(p+gamma)*e3 - q*e4; "
                          "e1.e4=q*e3 + (p+gamma)*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e4.e1=gamma*e4",
               "gamma"),
           lsa("bn", "e1.e1=gamma*e2; e1.e2=e2; e1.e3=p*e3 - q*e4; e1.e4=q*e3 + p*e4", "gamma")])

R = region("q", "q+1 != 0", ["q=0", "q=1", "q=-2"])
entry("D10_q", "D^10_q", 1, "[e1,e2]=e2; [e1,e3]=(q+1)*e3; [e1,e4]=q*e4; [e2,e4]=e3", R,
      cases=[case(10, "constructive", "odd", R, [form("1", "(1+q)*e1^e3 + e2^e4", R)], [
          extension("pi-t-star", 0, "e1|e4", "[e1,e4]=q*e4",
                    "(e1,e1)=-(q+1)*e1; (e1,e4)=-e4; (e4,e1)=-(q+1)*e4",
                    "e1 = e1; e4 = e4; e2 = Pi(e4*); e3 = -(q+1)*Pi(e1*)")])],
      lsa=[lsa("novikov", "e1.e1=-q*e1 + gamma*(q-1)*e2; e1.e2=(1-q)*e2; e1.e3=e3; e1.e4=gamma*e3; "
                          "e2.e1=-q*e2; e3.e1=-q*e3; e4.e1=gamma*e3 - q*e4; e4.e2=-e3", "gamma"),
           lsa("bn", "e1.e1=-e1; e1.e3=1/2*(1+2*q)*e3; e1.e4=1/2*(2*q-1)*e4; e2.e1=-e2; e2.e4=e3; "
                     "e3.e1=-e3; e4.e1=-e4")])

# ---- Table 2: non-trivial, sdim 2|2 ----------------------------------------

D7H = "[e1,e2]=e2; [e1,e3]=1/2*e3; [e1,e4]=1/2*e4; [e3,e3]=e2"
entry("D7_1/2,1/2^1", "(D^7_{1/2,1/2})^1", 2, D7H + "; [e4,e4]=e2",
      cases=[case(11, "no-lagrangian", "even", forms=[form("0", "e1^e2 - 1/2*e3^e3 - 1/2*e4^e4")],
                  certificate="D7_1/2,1/2^1")],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + lambda*e2; e1.e2=1/2*e2; e2.e1=-1/2*e2; e3.e1=-1/2*e3; "
                          "e3.e3=1/2*e2; e3.e4=gamma*e2; e4.e1=-1/2*e4; e4.e3=-gamma*e2; e4.e4=1/2*e2",
               "lambda gamma"),
           lsa("bn", "e1.e1=(gamma-1)*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=gamma/2*e3; e1.e4=gamma/2*e4; "
                     "e2.e1=(gamma-1)*e2; e3.e1=(gamma-1)*e3; e3.e3=e2; e4.e1=(gamma-1)*e4; e4.e4=e2",
               "lambda gamma")])

entry("D7_1/2,1/2^2", "(D^7_{1/2,1/2})^2", 2, D7H + "; [e4,e4]=-e2",
      cases=[case(12, "constructive", "even", forms=[form("0", "-e1^e2 + 1/2*e3^e3 - 1/2*e4^e4")],
                  extensions=[extension("t-star", 0, "e1|x", "[e1,x]=1/2*x",
                                        "(e1,e1)=-e1; (e1,x)=-1/2*x; (x,e1)=-x",
                                        "e1 = e1; e3 - e4 = x; e2 = e1*; e3 + e4 = -2*x*")])],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + lambda*e2; e1.e2=1/2*e2; e2.e1=-1/2*e2; e3.e1=-1/2*e3; "
                          "e3.e3=1/2*e2; e4.e1=-1/2*e4; e4.e4=-1/2*e2", "lambda"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=(1+gamma)*e2; e1.e3=1/2*(1+gamma)*e3; "
                     "e1.e4=1/2*(1+gamma)*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e3.e3=e2; "
                     "e4.e1=gamma*e4; e4.e4=-e2", "lambda gamma")])

entry("D7_1/2,1/2^3", "(D^7_{1/2,1/2})^3", 2, D7H,
      cases=[not_qf(13)],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + lambda*e2; e1.e2=1/2*e2; e2.e1=-1/2*e2; e3.e1=-1/2*e3; "
                          "e3.e3=1/2*e2; e4.e1=-1/2*e4", "lambda"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=(1+gamma)*e2; e1.e3=1/2*(1+gamma)*e3; "
                     "e1.e4=1/2*(1+gamma)*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e3.e3=e2; e4.e1=gamma*e4",
               "lambda gamma")])

R = region("p", "1/2-p >= 0", ["p=1/2", "p=0", "p=-1"])
entry("D7_1-p,p", "D^7_{1-p,p}", 2, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=(1-p)*e4; [e3,e4]=e2", R,
      cases=[case(14, "constructive", "even", R, [form("0", "e1^e2 - e3^e4", R)], [
          extension("t-star", 0, "e1|e4", "[e1,e4]=(1-p)*e4", "(e1,e1)=-e1; (e1,e4)=-p*e4; (e4,e1)=-e4",
                    "e1 = e1; e4 = e4; e2 = -e1*; e3 = e4*")])],
      lsa=[lsa("novikov", "e1.e1=-p*e1 + lambda*e2; e1.e2=(1-p)*e2; e1.e4=(1-2*p)*e4; e2.e1=-p*e2; "
                          "e3.e1=-p*e3; e3.e4=e2; e4.e1=-p*e4", "lambda"),
           lsa("bn", "e1.e1=(gamma-1)*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=1/2*(2*p+gamma-1)*e3; "
                     "e1.e4=1/2*(1-2*p+gamma)*e4; e3.e1=(gamma-1)*e3; e3.e4=e2; e2.e1=(gamma-1)*e2; "
                     "e4.e1=(gamma-1)*e4; e4.e3=e2", "lambda gamma")])

entry("D8_1/2", "D^8_{1/2}", 2, "[e1,e2]=e2; [e1,e3]=1/2*e3; [e1,e4]=e3 + 1/2*e4; [e4,e4]=e2",
      cases=[not_qf(15)],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + lambda*e2; e1.e2=1/2*e2; e1.e4=e3; e2.e1=-1/2*e2; "
                          "e3.e1=-1/2*e3; e4.e1=-1/2*e4; e4.e4=1/2*e2", "lambda"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=(1+gamma)*e2; e1.e3=1/2*(1+gamma)*e3; "
                     "e1.e4=e3 + 1/2*(1+gamma)*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e4.e1=gamma*e4; "
                     "e4.e4=e2", "lambda gamma")])

R = region("p", "p > 0", ["p=1", "p=1/2", "p=3"])
entry("D9_1/2,p", "D^9_{1/2,p}", 2,
      "[e1,e2]=e2; [e3,e3]=e2; [e1,e4]=p*e3 + 1/2*e4; [e4,e4]=e2; [e1,e3]=1/2*e3 - p*e4", R,
      cases=[case(16, "no-lagrangian", "even", R, [form("0", "e1^e2 - 1/2*e3^e3 - 1/2*e4^e4", R)],
                  certificate="D9_1/2,p")],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + lambda*e2; e1.e2=1/2*e2; e1.e3=-p*e4; e1.e4=p*e3; "
                          "e2.e1=-1/2*e2; e3.e1=-1/2*e3; e3.e3=1/2*e2; e4.e1=-1/2*e4; e4.e4=1/2*e2",
               "lambda"),
           lsa("bn", "e1.e1=(gamma-1)*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=gamma/2*e3 - p*e4; "
                     "e1.e4=p*e3 + gamma/2*e4; e2.e1=(gamma-1)*e2; e3.e1=(gamma-1)*e3; e3.e3=e2; "
                     "e4.e1=(gamma-1)*e4; e4.e4=e2", "lambda gamma")])

D10_FORMS = [form("0", "2*e2^e1 - e3^e4"), form("1", "e1^e3 + e2^e4")]


def d10_extensions(s):
    half = "1/2" if s == "" else "-1/2"
    nab = f"(e1,e1)=-e1; (e1,e4)=-e4; (e4,e1)=-e4; (e4,e4)={half}*e1"
    br = f"[e4,e4]={s}e1"
    return [
        extension("pi-t-star", 1, "e1|e4", br, nab, "e1 = e1; e4 = e4; e2 = -Pi(e4*); e3 = Pi(e1*)"),
        extension("t-star", 0, "e1|e4", br, nab, "e1 = e1; e4 = e4; e2 = 2*e1*; e3 = e4*"),
    ]


entry("D10_0^1", "(D^10_0)^1", 2, "[e1,e2]=e2; [e1,e3]=e3; [e2,e4]=e3; [e4,e4]=e1; [e3,e4]=-1/2*e2",
      cases=[case(17, "constructive", "both", forms=D10_FORMS, extensions=d10_extensions(""))],
      lsa=[lsa("lssa", "e1.e1=-e1; e1.e4=-e4; e2.e1=-e2; e2.e4=(1+gamma)*e3; e3.e1=-e3; "
                       "e3.e4=-1/2*e2; e4.e1=-e4; e4.e2=gamma*e3; e4.e4=1/2*e1", "gamma"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=(1+gamma)*e2; e1.e3=1/2*(2+gamma)*e3; "
                     "e1.e4=-lambda*e3 + gamma/2*e4; e2.e1=gamma*e2; e2.e4=-gamma*e3; e3.e1=gamma*e3; "
                     "e3.e4=-1/2*e2; e4.e1=-2*lambda*e3 + gamma*e4; e4.e2=-2*(1+gamma)*e3; "
                     "e4.e3=-1/2*e2; e4.e4=e1", "lambda gamma")])

entry("D10_0^2", "(D^10_0)^2", 2, "[e1,e2]=e2; [e1,e3]=e3; [e2,e4]=e3; [e4,e4]=-e1; [e3,e4]=1/2*e2",
      cases=[case(18, "constructive", "both", forms=D10_FORMS, extensions=d10_extensions("-"))],
      lsa=[lsa("lssa", "e1.e1=-e1 - 2*lambda*gamma*e2; e1.e4=gamma*e3 - e4; e2.e1=-e2; e2.e4=e3; "
                       "e3.e1=-e3; e3.e4=1/2*(1-2*lambda)*e2; e4.e1=gamma*e3 - e4; e4.e3=lambda*e2; "
                       "e4.e4=-1/2*e1", "lambda gamma"),
           lsa("bn", "e1.e1=(gamma-1)*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=1/2*(1+gamma)*e3; "
                     "e1.e4=-lambda*e3 + 1/2*(gamma-1)*e4; e2.e1=(gamma-1)*e2; e2.e4=(1-gamma)*e3; "
                     "e3.e1=(gamma-1)*e3; e3.e4=1/2*e2; e4.e1=-2*lambda*e3 + (gamma-1)*e4; "
                     "e4.e2=-2*gamma*e3; e4.e3=1/2*e2; e4.e4=-e1", "lambda gamma")])

entry("2A_1,1+2A^1", "(2A_{1,1}+2A)^1", 2, "[e3,e3]=e1; [e4,e4]=e2",
      cases=[not_qf(19)],
      lsa=[lsa("novikov", "e3.e3=1/2*e1; e3.e4=lambda*e1 + gamma*e2; e4.e3=-lambda*e1 - gamma*e2; "
                          "e4.e4=1/2*e2", "lambda gamma"),
           lsa("bn", "e1.e1=gamma*e1; e1.e3=gamma/2*e3; e2.e2=2*lambda*e2; e2.e4=lambda*e4; "
                     "e3.e1=gamma*e3; e3.e3=e1; e4.e2=2*lambda*e4; e4.e4=e2", "lambda gamma")])

entry("2A_1,1+2A^2", "(2A_{1,1}+2A)^2", 2, "[e3,e3]=e1; [e4,e4]=e2; [e3,e4]=e1",
      cases=[not_qf(20)],
      lsa=[lsa("novikov", "e3.e3=1/2*e1; e3.e4=gamma*e1; e4.e3=(1-gamma)*e1; e4.e4=1/2*e2", "gamma"),
           lsa("bn", "e1.e1=2*gamma*e1; e1.e2=2*gamma*e1; e1.e3=gamma*e3; e1.e4=gamma*e3; "
                     "e2.e1=2*gamma*e1; e2.e2=-2*(lambda-gamma)*e1 + 2*lambda*e2; e2.e3=gamma*e3; "
                     "e2.e4=(gamma-lambda)*e3 + lambda*e4; e3.e1=2*gamma*e3; e3.e2=2*gamma*e3; "
                     "e3.e3=e1; e3.e4=e1; e4.e1=2*gamma*e3; e4.e2=-2*(lambda-gamma)*e3 + 2*lambda*e4; "
                     "e4.e3=e1; e4.e4=e2", "lambda gamma")])

R = region("p", "p > 0", ["p=1", "p=1/2", "p=2"])
R_GEN = region("p", "p > 0; p-1/2 != 0", ["p=1", "p=2", "p=1/3"])
R_HALF = region("p", "p-1/2 = 0", ["p=1/2"])
entry("2A_1,1+2A^3_p", "(2A_{1,1}+2A)^3_p", 2, "[e3,e3]=e1; [e4,e4]=e2; [e3,e4]=p*e1 + p*e2", R,
      cases=[not_qf(21, R_GEN),
             case(21, "constructive", "odd", R_HALF, [form("1", "e2^e3 - e1^e4", R_HALF)], [
                 extension("pi-t-star", 0, ",|e3,e4", "", "",
                           "e3 = e3; e4 = e4; e1 = -Pi(e4*); e2 = Pi(e3*)",
                           [("1/2*Pi(e4*)", "e3^e3"), ("-1/2*Pi(e3*)", "e4^e4"),
                            ("-1/2*Pi(e3*) + 1/2*Pi(e4*)", "e3^e4")])])],
      lsa=[lsa("novikov", "e3.e3=1/2*e1; e3.e4=gamma*e1; e4.e3=(p-gamma)*e1 + p*e2; e4.e4=1/2*e2", "gamma"),
           lsa("bn", "e1.e1=2/p*(p^2*gamma + lambda*(2*p^2-1))*e1 + 2*p*lambda*e2; "
                     "e1.e2=-2*p*lambda*e1 + 2*p*gamma*e2; "
                     "e1.e3=1/p*(p^2*gamma + lambda*(p^2-1))*e3 + lambda*e4; "
                     "e1.e4=-lambda*e3 + p*(gamma+lambda)*e4; "
                     "e2.e1=-2*p*lambda*e1 + 2*p*gamma*e2; "
                     "e2.e2=-2*p*gamma*e1 - 2/p*(p^2*lambda + (2*p^2-1)*gamma)*e2; "
                     "e2.e3=-p*(lambda+gamma)*e3 + gamma*e4; "
                     "e2.e4=-gamma*e3 + 1/p*((1-p^2)*gamma - p^2*lambda)*e4; "
                     "e3.e1=2/p*(p^2*gamma + (p^2-1)*lambda)*e3 + 2*lambda*e4; "
                     "e3.e2=-2*p*(gamma+lambda)*e3 + 2*gamma*e4; e3.e3=e1; e3.e4=p*e1 + p*e2; "
                     "e4.e1=-2*lambda*e3 + 2*p*(gamma+lambda)*e4; "
                     "e4.e2=-2*gamma*e3 - 2/p*((p^2-1)*gamma + p^2*lambda)*e4; "
                     "e4.e3=p*e1 + p*e2; e4.e4=e2", "lambda gamma")])

R = region("p", "p > 0", ["p=1", "p=2", "p=1/2"])
entry("2A_1,1+2A^4_p", "(2A_{1,1}+2A)^4_p", 2, "[e3,e3]=e1; [e4,e4]=e2; [e3,e4]=p*e1 - p*e2", R,
      cases=[not_qf(22, R)],
      lsa=[lsa("novikov", "e3.e3=1/2*e1; e3.e4=gamma*e1; e4.e3=(p-gamma)*e1 - p*e2; e4.e4=1/2*e2", "gamma"),
           lsa("bn", "e1.e1=-2/p*(p^2*gamma - lambda*(2*p^2+1))*e1 - 2*p*lambda*e2; "
                     "e1.e2=2*p*lambda*e1 - 2*p*gamma*e2; "
                     "e1.e3=1/p*(-p^2*gamma + lambda*(p^2+1))*e3 + lambda*e4; "
                     "e1.e4=lambda*e3 + p*(-gamma+lambda)*e4; "
                     "e2.e1=2*p*lambda*e1 - 2*p*gamma*e2; "
                     "e2.e2=2*p*gamma*e1 - 2/p*(-p^2*lambda + (2*p^2+1)*gamma)*e2; "
                     "e2.e3=p*(-gamma+lambda)*e3 + gamma*e4; "
                     "e2.e4=gamma*e3 + 1/p*((-1-p^2)*gamma + p^2*lambda)*e4; "
                     "e3.e1=2/p*(-p^2*gamma + (p^2+1)*lambda)*e3 + 2*lambda*e4; "
                     "e3.e2=-2*p*(gamma-lambda)*e3 + 2*gamma*e4; e3.e3=e1; e3.e4=p*e1 - p*e2; "
                     "e4.e1=2*lambda*e3 - 2*p*(gamma-lambda)*e4; "
                     "e4.e2=2*gamma*e3 - 2/p*((p^2+1)*gamma - p^2*lambda)*e4; "
                     "e4.e3=p*e1 - p*e2; e4.e4=e2", "lambda gamma")])

entry("C1_1+A", "(C^1_1+A)", 2, "[e1,e2]=e2; [e1,e3]=e3; [e3,e4]=e2",
      cases=[case(23, "constructive", "even", forms=[form("0", "1/2*e2^e1 + 1/2*e3^e4 + 1/4*e4^e4")],
                  extensions=[extension("t-star", 0, "e1|x", "", "(e1,e1)=-e1; (e1,x)=-x; (x,e1)=-x",
                                        "e1 = e1; e3 - 2*e4 = x; e2 = 1/2*e1*; e3 = x*",
                                        [("e1*", "x^x"), ("x*", "e1^x")])])],
      lsa=[lsa("novikov", "e1.e1=lambda*e1 + gamma*e2; e1.e2=(1+lambda)*e2; e1.e3=(1+lambda)*e3; "
                          "e1.e4=lambda*e4; e2.e1=lambda*e2; e3.e1=lambda*e3; e3.e4=-lambda*e2; "
                          "e4.e1=lambda*e4; e4.e3=(1+lambda)*e2", "lambda gamma"),
           lsa("bn", "e1.e1=(gamma-1)*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=1/2*(1+gamma)*e3; "
                     "e1.e4=1/2*(gamma-1)*e4; e2.e1=(gamma-1)*e2; e3.e1=(gamma-1)*e3; e3.e4=e2; "
                     "e4.e1=(gamma-1)*e4; e4.e3=e2", "lambda gamma")])

R = region("lambda mu", "lambda*mu != 0", ["lambda=1,mu=1", "lambda=2,mu=-1", "lambda=-1/2,mu=3"])
entry("C1_1/2+A", "(C^1_{1/2}+A)", 2, "[e1,e2]=e2; [e1,e3]=1/2*e3; [e3,e3]=e2",
      cases=[case(24, "no-lagrangian", "even",
                  forms=[form("0", "lambda*e1^e2 - lambda/2*e3^e3 - mu/2*e4^e4", R)],
                  certificate="C1_1/2+A")],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + gamma*e2; e1.e2=1/2*e2; e2.e1=-1/2*e2; e3.e1=-1/2*e3; "
                          "e3.e3=1/2*e2", "gamma"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=(1+gamma)*e2; e1.e3=1/2*(1+gamma)*e3; "
                     "e1.e4=gamma/2*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e3.e3=e2; e4.e1=gamma*e4",
               "lambda gamma")])

entry("C2_-1+A", "(C^2_{-1}+A)", 2, "[e1,e3]=e3; [e1,e4]=-e4; [e3,e4]=e2",
      cases=[not_qf(25)],
      lsa=[lsa("novikov", "e1.e1=(2*lambda-1)*e1 + gamma*e2; e1.e2=(2*lambda-1)*e2; e1.e3=2*lambda*e3; "
                          "e1.e4=2*(lambda-1)*e4; e2.e1=(2*lambda-1)*e2; e3.e1=(2*lambda-1)*e3; "
                          "e3.e4=(1-lambda)*e2; e4.e1=(2*lambda-1)*e4; e4.e3=lambda*e2", "lambda gamma"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=1/2*(2+gamma)*e3; "
                     "e1.e4=1/2*(gamma-2)*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e3.e4=e2; "
                     "e4.e1=gamma*e4; e4.e3=e2", "lambda gamma")])

entry("C3+A", "(C^3+A)", 2, "[e1,e4]=e3; [e4,e4]=e2",
      cases=[case(26, "constructive", "even", forms=[form("0", "2*e1^e2 - e3^e4")], extensions=[
          extension("t-star", 0, "e2|e4", "[e4,e4]=e2", "(e4,e4)=1/2*e2",
                    "e2 = e2; e4 = e4; e1 = 2*e2*; e3 = e4*")])],
      lsa=[lsa("novikov", "e4.e1=-e3; e4.e4=1/2*e2"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=gamma/2*e3; "
                     "e1.e4=e3 + gamma/2*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e4.e1=gamma*e4; e4.e4=e2",
               "lambda gamma")])

entry("C5_0+A", "(C^5_0+A)", 2, "[e1,e3]=-e4; [e1,e4]=e3; [e3,e3]=e2; [e4,e4]=e2",
      cases=[not_qf(27)],
      lsa=[lsa("novikov", "e1.e1=2*lambda*e1 + gamma*e2; e1.e2=2*lambda*e2; e1.e3=2*lambda*e3 - e4; "
                          "e1.e4=e3 + 2*lambda*e4; e2.e1=2*lambda*e2; e3.e1=2*lambda*e3; e3.e3=1/2*e2; "
                          "e3.e4=-lambda*e2; e4.e1=2*lambda*e4; e4.e3=lambda*e2; e4.e4=1/2*e2",
               "lambda gamma"),
           lsa("bn", "e1.e1=gamma*e1 + lambda*e2; e1.e2=gamma*e2; e1.e3=gamma/2*e3 - e4; "
                     "e1.e4=e3 + gamma/2*e4; e2.e1=gamma*e2; e3.e1=gamma*e3; e3.e3=e2; "
                     "e4.e1=gamma*e4; e4.e4=e2", "lambda gamma")])

# ---- Table 3: trivial, sdim 3|1 --------------------------------------------

R = region("lambda mu nu gamma", "lambda*mu != 0",
           ["lambda=1,mu=1,nu=0,gamma=0", "lambda=2,mu=-1,nu=1,gamma=3", "lambda=-1,mu=1/2,nu=-2,gamma=1"])
entry("D1", "D^1", 3, "[e2,e3]=e1; [e2,e4]=e4",
      cases=[nh(28, "lambda*e1^e3 + mu*e2^e4 + nu*e1^e2 + gamma*e2^e3", R)],
      lsa=[lsa("novikov", "e2.e2=lambda*e1 + gamma*e3; e2.e3=(1+mu)*e1; e2.e4=e4; e3.e2=mu*e1",
               "lambda mu gamma"),
           lsa("bn", "e2.e2=gamma*e1 + lambda*e3; e2.e4=e4; e3.e2=-e1", "lambda gamma")])

R = region("q", "q != 0; q+1 != 0", ["q=1", "q=2", "q=-1/2"])
entry("D2_q", "D^2_q", 3, "[e1,e3]=e1; [e2,e3]=e1 + e2; [e3,e4]=q*e4", R,
      cases=[not_qf(29, R)],
      lsa=[lsa("novikov", "e1.e3=-q*e1; e2.e3=-q*e2; e3.e1=-(1+q)*e1; e3.e2=-e1 - (q+1)*e2; "
                          "e3.e3=-q*e3; e4.e3=-q*e4"),
           lsa("bn", "e3.e1=-e1; e3.e2=-e1 - e2; e3.e3=lambda*e1 + gamma*e2; e3.e4=q*e4",
               "lambda gamma")])

R = region("lambda mu nu gamma", "lambda*nu != 0",
           ["lambda=1,mu=0,nu=1,gamma=0", "lambda=2,mu=1,nu=-1,gamma=3", "lambda=-1,mu=-2,nu=1/2,gamma=1"])
entry("D2_-1", "D^2_{-1}", 3, "[e1,e3]=e1; [e2,e3]=e1 + e2; [e3,e4]=-e4",
      cases=[nh(30, "lambda*e1^e3 + mu*e2^e3 + nu*e2^e4 + gamma*e3^e4", R)])

R = region("p q", "p*q != 0", ["p=1,q=1", "p=-1,q=2", "p=1/2,q=-1"])
entry("D3_pq", "D^3_{pq}", 3, "[e1,e3]=p*e1 - e2; [e2,e3]=e1 + p*e2; [e3,e4]=q*e4", R,
      cases=[not_qf(31, R)],
      lsa=[lsa("novikov", "e1.e3=(p+gamma)*e1; e2.e3=(p+gamma)*e2; e3.e1=gamma*e1 + e2; "
                          "e3.e2=-e1 + gamma*e2; e3.e3=lambda*e1 + mu*e2 + (p+gamma)*e3; "
                          "e3.e4=(p+q+gamma)*e4; e4.e3=(p+gamma)*e4", "lambda mu gamma"),
           lsa("bn", "e3.e1=-p*e1 + e2; e3.e2=-e1 - p*e2; e3.e3=lambda*e1 + gamma*e2; e3.e4=q*e4",
               "lambda gamma")])

# ---- Table 4: trivial, sdim 1|3 --------------------------------------------

R = region("p q", "p != 0; q^2-p^2 >= 0; 1-q^2 >= 0; p+q != 0; q+1 != 0",
           ["p=1/2,q=1", "p=1,q=1", "p=-1/2,q=1", "p=1/3,q=-1/2"])
entry("D11_pq", "D^11_{pq}", 4, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=q*e4", R,
      cases=[not_qf(32, R)],
      lsa=[lsa("novikov", "e1.e2=e2; e1.e3=p*e3; e1.e4=q*e4"),
           lsa("bn", "e1.e2=e2; e1.e3=p*e3; e1.e4=q*e4")])

R = region("lambda mu nu gamma delta", "nu*gamma - mu*delta != 0",
           ["lambda=0,mu=0,nu=1,gamma=1,delta=0", "lambda=1,mu=1,nu=2,gamma=1,delta=1",
            "lambda=-1,mu=2,nu=0,gamma=3,delta=-1"])
entry("D11_-1,-1", "D^11_{-1,-1}", 4, "[e1,e2]=e2; [e1,e3]=-e3; [e1,e4]=-e4",
      cases=[nh(33, "lambda*e1^e2 + mu*e1^e3 + nu*e1^e4 + gamma*e2^e3 + delta*e2^e4", R)])

R = region("p", "p != 0; 1-p^2 >= 0", ["p=1/2", "p=1", "p=-1/2"])
RF = merge_regions(R, region("lambda mu nu gamma", "lambda*gamma != 0",
                             ["lambda=1,mu=0,nu=0,gamma=1", "lambda=2,mu=1,nu=-1,gamma=-1",
                              "lambda=-1,mu=3,nu=1/2,gamma=2"]))
entry("D11_p,-p", "D^11_{p,-p}", 4, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=-p*e4", R,
      cases=[nh(34, "lambda*e1^e2 + mu*e1^e3 + nu*e1^e4 + gamma*e3^e4", RF)])

R = region("p", "p != 0; 1-p^2 > 0", ["p=1/2", "p=-1/2", "p=1/3"])
RF = merge_regions(R, region("lambda mu nu gamma", "mu*gamma != 0",
                             ["lambda=0,mu=1,nu=0,gamma=1", "lambda=1,mu=2,nu=-1,gamma=-1",
                              "lambda=3,mu=-1,nu=1/2,gamma=2"]))
entry("D11_p,-1", "D^11_{p,-1}", 4, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=-e4", R,
      cases=[nh(35, "lambda*e1^e2 + mu*e1^e3 + nu*e1^e4 + gamma*e2^e4", RF)])

entry("D12", "D^12", 4, "[e1,e2]=e2; [e1,e4]=e3",
      cases=[not_qf(36)],
      lsa=[lsa("novikov", "e1.e2=e2; e1.e4=(1+gamma)*e3; e4.e1=gamma*e3", "gamma"),
           lsa("bn", "e1.e1=-2*e1; e1.e3=-e3; e1.e4=e3 - e4; e2.e1=-2*e2; e3.e1=-2*e3; e4.e1=-2*e4")])

R = region("p", "p != 0; p+1 != 0", ["p=1", "p=2", "p=-1/2"])
entry("D13_p", "D^13_p", 4, "[e1,e2]=p*e2; [e1,e3]=e3; [e1,e4]=e3 + e4", R,
      cases=[not_qf(37, R)],
      lsa=[lsa("novikov", "e1.e2=p*e2; e1.e3=e3; e1.e4=e3 + e4"),
           lsa("bn", "e1.e1=2*(gamma-1)*e1; e1.e2=(p-1+gamma)*e2; e1.e3=gamma*e3; e1.e4=e3 + gamma*e4; "
                     "e2.e1=2*(gamma-1)*e2; e3.e1=2*(gamma-1)*e3; e4.e1=2*(gamma-1)*e4", "gamma")])

R = region("lambda mu gamma nu", "mu*nu != 0",
           ["lambda=0,mu=1,gamma=0,nu=1", "lambda=1,mu=2,gamma=-1,nu=-1", "lambda=-1,mu=-1,gamma=3,nu=1/2"])
entry("D13_-1", "D^13_{-1}", 4, "[e1,e2]=-e2; [e1,e3]=e3; [e1,e4]=e3 + e4",
      cases=[nh(38, "lambda*e1^e2 + mu*e1^e3 + gamma*e1^e4 + nu*e2^e4", R)])

R = region("p q", "p != 0; q >= 0", ["p=1,q=0", "p=2,q=1", "p=-1,q=1/2"])
entry("D14_pq", "D^14_{pq}", 4, "[e1,e2]=p*e2; [e1,e3]=q*e3 - e4; [e1,e4]=q*e4 + e3", R,
      cases=[not_qf(39, R)],
      lsa=[lsa("novikov", "e1.e2=p*e2; e1.e3=q*e3 - e4; e1.e4=e3 + q*e4"),
           lsa("bn", "e1.e1=-2*q*e1; e1.e2=(p-q)*e2; e1.e3=-e4; e1.e4=e3; e2.e1=-2*q*e2; "
                     "e3.e1=-2*q*e3; e4.e1=-2*q*e4")])

R = region("lambda mu nu delta", "delta^2*(mu^2-2*lambda*nu) != 0",
           ["lambda=0,mu=1,nu=0,delta=1", "lambda=1,mu=1,nu=1,delta=2", "lambda=1,mu=0,nu=-1,delta=-1"])
entry("D15", "D^15", 4, "[e1,e3]=e2; [e1,e4]=e3",
      cases=[nh(40, "lambda*e1^e2 + mu*e1^e3 + nu*e1^e4 + delta*e2^e4 - 1/2*delta*e3^e3", R)],
      lsa=[lsa("novikov", "e1.e3=e2; e1.e4=gamma*e2 + e3; e4.e1=gamma*e2", "gamma"),
           lsa("bn", "e1.e1=2*gamma*e1; e1.e2=gamma*e2; e1.e3=e2 + gamma*e3; e1.e4=e3 + gamma*e4; "
                     "e2.e1=2*gamma*e2; e3.e1=2*gamma*e3; e4.e1=2*gamma*e4", "gamma")])

entry("D16", "D^16", 4, "[e1,e2]=e2; [e1,e3]=e2 + e3; [e1,e4]=e3 + e4",
      cases=[not_qf(41)],
      lsa=[lsa("novikov", "e1.e2=e2; e1.e3=e2 + e3; e1.e4=e3 + e4"),
           lsa("bn", "e1.e1=2*(gamma-1)*e1; e1.e2=gamma*e2; e1.e3=e2 + gamma*e3; e1.e4=e3 + gamma*e4; "
                     "e2.e1=2*(gamma-1)*e2; e3.e1=2*(gamma-1)*e3; e4.e1=2*(gamma-1)*e4", "gamma")])

# ---- Table 5: non-trivial, sdim 3|1 ----------------------------------------

entry("A3,1+A", "(A_{3,1}+A)", 5, "[e2,e3]=e1; [e4,e4]=e1",
      cases=[not_qf(42)],
      lsa=[lsa("novikov", "e2.e2=gamma*e1; e2.e3=(1+lambda)*e1; e3.e2=lambda*e1; e3.e3=mu*e1; "
                          "e4.e4=1/2*e1", "lambda gamma mu"),
           lsa("bn", "e2.e2=gamma*e1; e2.e3=lambda*e1; e3.e2=(lambda-1)*e1; e3.e3=mu*e1; e4.e4=e1",
               "lambda gamma mu")])

R = region("p", "p != 0; p+1/2 != 0", ["p=1", "p=2", "p=-1"])
entry("D3_p,-1/2", "D^3_{p,-1/2}", 5, "[e1,e2]=e2; [e1,e3]=p*e3; [e1,e4]=1/2*e4; [e4,e4]=e2", R,
      cases=[not_qf(43, R)],
      lsa=[lsa("novikov", "e1.e1=-1/2*e1 + lambda*e2 + gamma*e3; e1.e2=1/2*e2; e1.e3=1/2*(2*p-1)*e3; "
                          "e2.e1=-1/2*e2; e3.e1=-1/2*e3; e4.e1=-1/2*e4; e4.e4=1/2*e2", "lambda gamma"),
           lsa("bn", "e1.e1=gamma*e2 + lambda*e3; e1.e2=e2; e1.e3=p*e3; e1.e4=1/2*e4; e4.e4=e2",
               "lambda gamma")])

R = region("lambda mu nu gamma", "gamma*lambda != 0",
           ["lambda=1,mu=0,nu=0,gamma=1", "lambda=2,mu=1,nu=-1,gamma=-1", "lambda=-1,mu=3,nu=1/2,gamma=2"])
entry("D3_-1/2,-1/2", "D^3_{-1/2,-1/2}", 5, "[e1,e2]=e2; [e1,e3]=-1/2*e3; [e1,e4]=1/2*e4; [e4,e4]=e2",
      cases=[nh(44, "1/2*lambda*e1^e2 + mu*e1^e3 + nu*e1^e4 + gamma*e3^e4 + 1/2*lambda*e4^e4", R)])

for sgn, item in (("", 45), ("-", 46)):
    sup = "1" if sgn == "" else "2"
    entry(f"D2_-1/2^{sup}", f"(D^2_{{-1/2}})^{sup}", 5,
          f"[e1,e2]=e2; [e1,e3]={sgn}e2 + e3; [e1,e4]=1/2*e4; [e4,e4]=e2",
          cases=[not_qf(item)],
          lsa=[lsa("novikov", f"e1.e1=-1/2*e1 + lambda*e2 + gamma*e3; e1.e2=1/2*e2; "
                              f"e1.e3={sgn}e2 + 1/2*e3; e2.e1=-1/2*e2; e3.e1=-1/2*e3; e4.e1=-1/2*e4; "
                              f"e4.e4=1/2*e2", "lambda gamma"),
               lsa("bn", f"e1.e1=gamma*e2 + lambda*e3; e1.e2=e2; e1.e3={sgn}e2 + e3; e1.e4=1/2*e4; "
                         f"e4.e4=e2", "lambda gamma")])

# ---- Table 6: non-trivial, sdim 1|3 ----------------------------------------

for sgn, item in (("", 47), ("-", 48)):
    sup = "1" if sgn == "" else "2"
    entry(f"A1,1+3A^{sup}", f"(A_{{1,1}}+3A)^{sup}", 6, f"[e2,e2]=e1; [e3,e3]=e1; [e4,e4]={sgn}e1",
          cases=[not_qf(item)],
          lsa=[lsa("novikov", f"e2.e2=1/2*e1; e2.e3=lambda*e1; e2.e4=gamma*e1; e3.e2=-lambda*e1; "
                              f"e3.e3=1/2*e1; e3.e4=mu*e1; e4.e2=-gamma*e1; e4.e3=-mu*e1; "
                              f"e4.e4={sgn}1/2*e1", "lambda mu gamma"),
               lsa("bn", f"e2.e2=e1; e3.e3=e1; e4.e4={sgn}e1")])


def main():
    doc = {"schema_version": "1", "parameters": PARAMS, "entries": ENTRIES}
    import json

    text = json.dumps(doc, indent=1, ensure_ascii=False)
    catalog = cat.loads(text)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(cat.serialize(catalog), encoding="utf-8")
    print(f"wrote {len(catalog)} entries, per table {catalog.table_counts()} -> {OUT.relative_to(ROOT)}")


if __name__ == "__main__":
    main()

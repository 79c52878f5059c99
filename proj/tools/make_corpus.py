"""Writes the JSON corpus: geometric data, controls, Tate objects, sites and sheaves.

usage: make_corpus.py [OUT_DIR]   (default: corpus/ next to this script's parent)
"""
import json, os, sys
P = 5
out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "corpus")
os.makedirs(out, exist_ok=True)
def cx(lo, dims, d=None): return {"lo": lo, "dims": dims, "d": d or {}}
def phc(c, phi, filt, cmap):
    return {"rig": {"complex": c, "phi": phi}, "dr": {"complex": c, "filtration": filt}, "k": c, "c": cmap, "s": cmap}
def morph(m): return {"rig": m, "dr": m, "k": m}
def flags(): return {"c_quasi_iso": True, "s_quasi_iso": True, "phi_invertible": True}
def dump(name, obj):
    with open(os.path.join(out, name), "w") as f: json.dump(obj, f, indent=1); f.write("\n")

point_rg = phc(cx(0, [1]), {"0": [[1]]}, {"0": {"trivial": 0}}, {"0": [[1]]})
point = {"type": "datum", "name": "point", "p": P, "d": 0, "rgamma": point_rg, "rgamma_c": "same",
         "pairing": morph({"0": [[1]]}), "trace": morph({"0": [[1]]}),
         "unit": {"rig": [1], "k": [1], "dr": [1]}, "flags": flags()}
p1_rg = phc(cx(0, [1, 0, 1]), {"0": [[1]], "2": [[P]]}, {"0": {"trivial": 0}, "2": {"trivial": 1}},
            {"0": [[1]], "2": [[1]]})
p1 = {"type": "datum", "name": "projective_line", "p": P, "d": 1, "rgamma": p1_rg, "rgamma_c": "same",
      "pairing": morph({"0": [[1]], "2": [[1, 1]]}), "trace": morph({"2": [[1]]}),
      "unit": {"rig": [1], "k": [1], "dr": [1]}, "flags": flags()}
gm_rg = phc(cx(0, [1, 1]), {"0": [[1]], "1": [[P]]}, {"0": {"trivial": 0}, "1": {"trivial": 1}},
            {"0": [[1]], "1": [[1]]})
gm_rgc = phc(cx(1, [1, 1]), {"1": [[1]], "2": [[P]]}, {"1": {"trivial": 0}, "2": {"trivial": 1}},
             {"1": [[1]], "2": [[1]]})
gm = {"type": "datum", "name": "multiplicative_group", "p": P, "d": 1, "rgamma": gm_rg, "rgamma_c": gm_rgc,
      "pairing": morph({"1": [[1]], "2": [[1, 1]]}), "trace": morph({"2": [[1]]}),
      "unit": {"rig": [1], "k": [1], "dr": [1]}, "flags": flags()}
ell_filt = {"0": {"trivial": 0},
            "1": [{"level": 0, "basis": "whole"}, {"level": 1, "basis": [[1, 0]]}, {"level": 2, "basis": []}],
            "2": {"trivial": 1}}
ell_id = {"0": [[1]], "1": [[1, 0], [0, 1]], "2": [[1]]}
ell_rg = phc(cx(0, [1, 2, 1]), {"0": [[1]], "1": [[0, -P], [1, 1]], "2": [[P]]}, ell_filt, ell_id)
ell = {"type": "datum", "name": "elliptic_curve", "p": P, "d": 1, "rgamma": ell_rg, "rgamma_c": "same",
       "pairing": morph({"0": [[1]], "1": [[1, 0, 1, 0], [0, 1, 0, 1]], "2": [[1, 0, 1, -1, 0, 1]]}),
       "trace": morph({"2": [[1]]}), "unit": {"rig": [1], "k": [1], "dr": [1]}, "flags": flags()}
degenerate = dict(p1, name="degenerate_line", pairing=morph({"0": [[1]], "2": [[1, 0]]}))
del degenerate["unit"]
bad_csquare = dict(p1, name="broken_pairing",
                   pairing={"rig": {"0": [[1]], "2": [[1, 1]]}, "dr": {"0": [[1]], "2": [[1, 1]]},
                            "k": {"0": [[1]], "2": [[2, 2]]}})
bad_dd = dict(type="phc", p=P, **phc(cx(0, [1, 1, 1], {"0": [[1]], "1": [[1]]}),
                                     {"0": [[1]], "1": [[1]], "2": [[1]]},
                                     {"0": {"trivial": 0}, "1": {"trivial": 0}, "2": {"trivial": 0}},
                                     {"0": [[1]], "1": [[1]], "2": [[1]]}))
def tate(n):
    phi = "1/%d" % P**n if n > 0 else P**(-n)
    return dict(type="phc", p=P, **phc(cx(0, [1]), {"0": [[phi]]}, {"0": {"trivial": -n}}, {"0": [[1]]}))
for name, obj in [("point", point), ("projective_line", p1), ("multiplicative_group", gm), ("elliptic_curve", ell),
                  ("degenerate_line", degenerate), ("broken_pairing", bad_csquare), ("broken_differential", bad_dd),
                  ("tate_0", tate(0)), ("tate_1", tate(1)), ("tate_minus_1", tate(-1))]:
    dump(name + ".json", obj)
dump("line_to_point.json", {"type": "proper_map", "source": p1, "target": point,
                             "pullback_c": morph({"0": [[1]]})})
dump("line_double_cover.json", {"type": "proper_map", "source": p1, "target": p1,
                                 "pullback_c": morph({"0": [[1]], "2": [[2]]})})
dump("zigzag_square.json", {"type": "double_complex",
     "dims": [[0, 1, 1], [1, 0, 1], [1, 1, 1], [2, 0, 1]],
     "dh": [[0, 1, [[1]]], [1, 0, [[1]]]], "dv": [[1, 0, [[1]]]]})
dump("strict_interval.json", {"type": "filtered", "complex": cx(0, [1, 1], {"0": [[1]]}),
     "filtration": {"0": {"trivial": 0}, "1": {"trivial": 0}}})
dump("jumping_interval.json", {"type": "filtered", "complex": cx(0, [1, 1], {"0": [[1]]}),
     "filtration": {"0": {"trivial": 0}, "1": {"trivial": 1}}})
dump("strict_three_term.json", {"type": "filtered",
     "complex": cx(0, [1, 3, 1], {"0": [[1], [0], [0]], "1": [[0, 1, 0]]}),
     "filtration": {"0": {"trivial": 0},
                    "1": [{"level": 0, "basis": "whole"}, {"level": 1, "basis": [[0, 1, 0], [0, 0, 1]]}],
                    "2": {"trivial": 1}}})
def site(el, leq, pts=None, enough=True):
    return {"type": "site", "elements": el, "leq": leq, "points": pts if pts is not None else el, "enough_points": enough}
dump("site_point.json", site(["x"], []))
dump("site_sierpinski.json", site(["a", "b"], [["a", "b"]]))
dump("site_two_points.json", site(["a", "b"], []))
circ = [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]
dump("site_circle.json", site(["a", "b", "c", "d"], circ))
dump("site_circle_doubled.json", site(["a", "b", "c", "d"], circ, ["a", "b", "c", "d", "a", "b", "c", "d"]))
dump("site_sphere.json", site(["a", "b", "c", "d", "e", "f"],
     [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "e"], ["c", "f"], ["d", "e"], ["d", "f"]]))
dump("site_sierpinski_sparse.json", site(["a", "b"], [["a", "b"]], ["b"], False))
dump("sheaf_constant.json", {"type": "sheaf", "constant": 1})
dump("sheaf_skyscraper_a.json", {"type": "sheaf", "skyscraper": "a", "dim": 1})
dump("sheaf_circle_twisted.json", {"type": "sheaf", "dims": {"a": 1, "b": 1, "c": 1, "d": 1},
     "restrictions": [{"from": "a", "to": "c", "matrix": [[1]]}, {"from": "a", "to": "d", "matrix": [[1]]},
                      {"from": "b", "to": "c", "matrix": [[1]]}, {"from": "b", "to": "d", "matrix": [[-1]]}]})
dump("line_identity.json", {"type": "proper_map", "source": p1, "target": p1,
                               "pullback_c": morph({"0": [[1]], "2": [[1]]})})
files = sorted(f for f in os.listdir(out) if f.endswith(".json") and f != "manifest.json")
dump("manifest.json", {"type": "manifest", "files": [
    {"file": f, "type": json.load(open(os.path.join(out, f)))["type"], "valid": not f.startswith("broken_")} for f in files]})

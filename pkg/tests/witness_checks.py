"""Checks every produced witness must satisfy."""
from twobridge.alexander import alexander_poly, divides
from twobridge.contfrac import crossing_number, genus, knot_from_cf
from twobridge.ors import expand_pattern, same_knot
from twobridge.spectrum import admissible


def witness_violations(w):
    if w.reflexive:
        return [] if same_knot(w.source, w.target) else ["reflexive flag on distinct knots"]
    out = []
    exp = expand_pattern(w.pattern)
    if not same_knot(exp.knot, w.source):
        out.append("pattern does not expand to the source")
    if not same_knot(knot_from_cf(w.pattern.base), w.target):
        out.append("base does not evaluate to the target")
    n, k = genus(w.source), genus(w.target)
    r = w.pattern.reps
    if w.zero_count != w.pattern.zero_count or w.zero_count != (2 * r + 1) * k + r - n:
        out.append("zero count inconsistent")
    if len(exp.reduced) != 2 * ((2 * r + 1) * k + r - w.zero_count):
        out.append("length law")
    if not admissible(k, n):
        out.append("genus not admissible")
    if n < 3 * k - 1:
        out.append("genus inequality")
    if crossing_number(w.source) < 3 * crossing_number(w.target):
        out.append("crossing inequality")
    if not divides(alexander_poly(w.target), alexander_poly(w.source)):
        out.append("Alexander divisibility")
    return out

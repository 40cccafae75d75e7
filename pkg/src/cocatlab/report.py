"""Check reports.

Every verification routine returns a CheckReport: an identifier, a verdict,
a details dict of whatever the check measured, and the mathematical statement
the check certifies (the "citation").  Timing lives outside the canonical
payload so that two runs of the same suite serialize byte-identically.
"""

PASS = "pass"
FAIL = "fail"
BOUNDED = "bounded"

VERDICTS = (PASS, FAIL, BOUNDED)


class CheckReport:

    def __init__(self, check_id, verdict, details, citation, elapsed=0.0):
        assert verdict in VERDICTS, verdict
        self.check_id = check_id
        self.verdict = verdict
        self.details = details
        self.citation = citation
        self.elapsed = elapsed

    @property
    def ok(self):
        return self.verdict == PASS

    def to_dict(self):
        # canonical: no timing data
        return {"id": self.check_id,
                "citation": self.citation,
                "verdict": self.verdict,
                "details": _plain(self.details)}

    def __repr__(self):
        return "CheckReport(%s: %s)" % (self.check_id, self.verdict)


def _plain(x):
    """Force details into JSON-stable primitives with sorted keys."""
    if isinstance(x, dict):
        return {str(k): _plain(x[k]) for k in sorted(x, key=str)}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, float, str)):
        return x
    return str(x)

"""Structured pass/fail records for the verification suites."""

import time


def check(name, identity, ok, witness=None):
    rec = {"name": name, "identity": identity,
           "status": "pass" if ok else "fail"}
    if not ok and witness is not None:
        rec["witness"] = _plain(witness)
    return rec


def skipped(name, identity, reason):
    return {"name": name, "identity": identity,
            "status": "skipped-singular", "witness": _plain(reason)}


def _plain(value):
    """Coerce a witness to something json.dumps accepts."""
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def all_pass(checks):
    return all(c["status"] == "pass" for c in checks)


def failed(checks):
    return [c for c in checks if c["status"] == "fail"]


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def assemble(command, checks, elapsed=None, seed=None, extra=None):
    """Final report: checks sorted by name, exit status derivable."""
    out = {"command": command,
           "checks": sorted(checks, key=lambda c: c["name"]),
           "ok": all_pass(checks)}
    if elapsed is not None:
        out["elapsed_seconds"] = round(elapsed, 6)
    if seed is not None:
        out["seed"] = seed
    if extra:
        out.update(extra)
    return out

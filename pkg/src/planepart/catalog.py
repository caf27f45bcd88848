"""One entry point for every enumerable class, with optional process sharding.

Whatever the number of workers, :func:`collect` returns objects in the
canonical order of their class (the ``sort_key`` of the defining module), so
output is identical for any ``jobs`` setting.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor

from . import cspp as _cspp
from . import domino as _domino
from . import tspp as _tspp
from .tspp import DEFAULT_LIMIT

CLASSES = ("tspp", "cspp", "gcspp", "dpp", "rdpp", "cdpp", "hpcspp", "vpcspp")
FILTERS = {
    "tspp": ("rho", "gamma"),
    "cspp": ("rho_tilde", "gamma_tilde"),
}


def sort_key_for(cls):
    if cls == "tspp":
        return _tspp.sort_key
    if cls == "cspp":
        return _cspp.sort_key
    if cls in ("hpcspp", "vpcspp"):
        return lambda p: (p.c0, p.c1)
    return _domino.sort_key


def _check(cls, filt):
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if filt is not None and filt not in FILTERS.get(cls, ()):
        allowed = ", ".join(FILTERS.get(cls, ())) or "none"
        raise ValueError(f"filter {filt!r} not available for {cls} (allowed: {allowed})")


def _shard(cls, n, m, filt, limit, shard):
    """Objects of one shard (or all of them when ``shard`` is None)."""
    if cls == "tspp":
        if filt is None:
            return _tspp.enumerate_tspp(n, m, limit=limit, shard=shard)
        return _tspp.enumerate_invariants(n, m, filt, limit=limit, shard=shard)
    if cls == "cspp":
        if filt is None:
            return _cspp.enumerate_cspp(n, m, limit=limit, shard=shard)
        if shard is None:
            return iter(_cspp.invariants_of(n, m, filt, limit=limit))
        side = "rho" if filt == "rho_tilde" else "gamma"
        return (_cspp.gamma_bij_inv(b) for b in _tspp.enumerate_invariants(n, m, side, limit=limit, shard=shard))
    if cls in _domino.FAMILIES:
        return _domino.enumerate_family(cls, n, m, limit=limit, shard=shard)
    if shard is not None and shard[0] != 0:
        # pairs are cheap and not sharded; worker 0 produces all of them
        return iter(())
    kind = "h" if cls == "hpcspp" else "v"
    return _domino.enumerate_pcspp(n, m, kind, limit=limit)


def _shard_list(args):
    cls, n, m, filt, limit, shard = args
    return list(_shard(cls, n, m, filt, limit, shard))


def _shard_count(args):
    cls, n, m, filt, limit, shard = args
    return sum(1 for _ in _shard(cls, n, m, filt, limit, shard))


def _run(worker, cls, n, m, filt, limit, jobs):
    tasks = [(cls, n, m, filt, limit, (k, jobs)) for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def collect(cls, n, m=0, filt=None, *, limit=DEFAULT_LIMIT, jobs=1):
    """All objects of the class, canonically ordered."""
    _check(cls, filt)
    _tspp.check_limit(n, m, limit)
    if jobs <= 1:
        items = list(_shard(cls, n, m, filt, limit, None))
    else:
        items = [x for part in _run(_shard_list, cls, n, m, filt, limit, jobs) for x in part]
    return sorted(items, key=sort_key_for(cls))


def count(cls, n, m=0, filt=None, *, limit=DEFAULT_LIMIT, jobs=1):
    _check(cls, filt)
    _tspp.check_limit(n, m, limit)
    if jobs <= 1:
        return sum(1 for _ in _shard(cls, n, m, filt, limit, None))
    return sum(_run(_shard_count, cls, n, m, filt, limit, jobs))


def parse_object(data):
    """Build a validated object from its JSON form (a dict or a JSON string)."""
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind == "tspp":
        return _tspp.Tspp.from_json(data)
    if kind == "cspp":
        return _cspp.Cspp.from_json(data)
    if kind == "domino":
        return _domino.DominoTableau.from_json(data)
    if kind == "pair":
        return _domino.PairedPP.from_json(data)
    raise ValueError(f"unknown object kind {kind!r}")

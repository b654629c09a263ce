"""Filter-chain arbitration."""

from typing import Optional, Tuple

from ahbplus.bus.filters import Candidates, FilterContext, filter_chain, get_filter

EMPTY_TRACE: Tuple[Candidates, ...] = ((),) * 7


def apply_filter(k: int, candidates: Candidates, ctx: FilterContext) -> Candidates:
    """Apply filter ``k`` (1..7) with the pass-through rules.

    A disabled filter (2..6) or one that would empty a non-empty set returns
    its input unchanged.
    """
    flt = get_filter(k)
    if not flt.always_on and not ctx.config.filter_on(k):
        return candidates
    out = flt.fn(candidates, ctx)
    if not out and candidates:
        return candidates
    return out


def arbitrate(pool: Candidates, ctx: FilterContext) -> Tuple[Optional[int], Tuple[Candidates, ...]]:
    """Run the full chain over ``pool``.

    Returns:
        The granted id (None for an empty pool) and the per-filter trace.
    """
    if not pool:
        return None, EMPTY_TRACE
    trace = []
    candidates = tuple(sorted(pool))
    for flt in filter_chain():
        candidates = apply_filter(flt.index, candidates, ctx)
        trace.append(candidates)
    return candidates[0], tuple(trace)

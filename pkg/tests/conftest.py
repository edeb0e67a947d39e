import hypothesis.strategies as st


@st.composite
def partitions(draw, max_total: int = 8):
    """Random partition with |p| <= max_total, drawn part by part."""
    remaining = draw(st.integers(min_value=0, max_value=max_total))
    parts = []
    prev = remaining
    while remaining > 0:
        part = draw(st.integers(min_value=1, max_value=min(prev, remaining)))
        parts.append(part)
        prev = part
        remaining -= part
    return tuple(parts)

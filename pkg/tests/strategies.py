"""Hypothesis strategies for random legal blow-up programs."""

from hypothesis import strategies as st

from zigzag.boundary import FREE, ON_D, BlowupProgram, blow_up, blow_up_step1, init_hirzebruch
from zigzag.enumerator import interior_locations

stem_steps = st.lists(st.integers(0, 10), max_size=4)


def random_program(n, choice, picks, hosts):
    g = blow_up_step1(init_hirzebruch(n), choice)
    steps = []
    for pick in picks:
        locs = interior_locations(g)
        steps.append(locs[pick % len(locs)])
        g = blow_up(g, steps[-1])
    chain = g.chain_curves()
    return BlowupProgram(n, choice, tuple(steps), tuple(chain[h % len(chain)] for h in hosts))


programs = st.builds(
    random_program,
    st.integers(0, 3),
    st.sampled_from([ON_D, FREE]),
    stem_steps,
    st.lists(st.integers(0, 10), min_size=1, max_size=3),
)

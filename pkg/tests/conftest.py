from hypothesis import settings, strategies as st

from morseadic import BiSeq, EpSeq

settings.register_profile("default", deadline=None)
settings.load_profile("default")

bits = st.integers(0, 1)


@st.composite
def ep_seqs(draw, max_pre: int = 8, max_per: int = 6) -> EpSeq:
    pre = draw(st.lists(bits, max_size=max_pre))
    per = draw(st.lists(bits, min_size=1, max_size=max_per))
    return EpSeq(tuple(pre), tuple(per))


@st.composite
def bi_seqs(draw) -> BiSeq:
    return BiSeq(draw(ep_seqs()), draw(ep_seqs()))


small_ints = st.integers(-(2**12), 2**12)

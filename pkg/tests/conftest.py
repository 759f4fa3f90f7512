import pytest

from utils.textgen import GenSpec, generate

EXAMPLE_WORD = b"abaabbabbab"
FIG_WORD = b"011010011001011010010110011010011"


def random_corpus(count, max_length, alphabets=(2, 3, 4, 26), seed=0):
    """Seeded strings of varying length and alphabet size"""
    texts = []
    for j in range(count):
        sigma = alphabets[j % len(alphabets)]
        length = 1 + (j * 37 + seed) % max_length
        texts.append(generate(GenSpec(kind="random", length=length, alphabet=sigma, seed=seed * 100003 + j)))
    return texts


@pytest.fixture
def example_word():
    return EXAMPLE_WORD


@pytest.fixture
def fig_word():
    return FIG_WORD


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):
    """Point the config directory at an empty temp dir and clear overrides"""
    config_dir = tmp_path / "config"
    monkeypatch.setenv("DELTA_CONFIG_DIR", str(config_dir))
    monkeypatch.delenv("DELTA_ORACLE_CAP", raising=False)
    return config_dir

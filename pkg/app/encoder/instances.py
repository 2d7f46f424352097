from encoder.myrvold import encode_myrvold
from encoder.squares import encode_latin, Mode


def encode(cfg):
    """The instance an EncodeConfig describes."""
    if cfg.mode is Mode.MYRVOLD:
        return encode_myrvold(cfg)
    return encode_latin(cfg)

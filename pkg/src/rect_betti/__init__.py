"""rect-betti - syzygies of rectangular determinantal thickenings I_{a x b}."""

__version__ = "0.1.1"

__all__ = []

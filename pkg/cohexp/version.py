try:
    from importlib.metadata import version

    __version__ = version("cohexp-kit")
except Exception:
    # Not installed (running from a source checkout)
    __version__ = "0.0.0+local"

# _Versioning scheme:_
# The minor version is bumped whenever the certificate JSON layout changes,
# since certificates written by one minor version are replayed by the same
# minor version only. The revision number is bumped for everything else.

__version__ = "0.1.0"

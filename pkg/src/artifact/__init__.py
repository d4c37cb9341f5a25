"""Exact computations on exceptional Jordan algebras, Freudenthal triple systems,
the non-compact exceptional real forms and their parabolic subalgebras."""

__version__ = "0.1.0"

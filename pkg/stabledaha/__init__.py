"""Exact computations with the GL_k DAHA, its stable limit and PBW bases."""

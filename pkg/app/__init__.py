"""Phase-shift direct measurement toolkit."""

"""Checked-in spaces, maps and expected classifications."""

"""nano-continuity."""

"""Settings and result-cache clients."""

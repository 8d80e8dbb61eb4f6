"""Request models, exceptions, workers, verification suites and the service facade."""

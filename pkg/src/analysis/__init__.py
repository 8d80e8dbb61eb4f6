"""Hypergeometric evaluation, correlation functions and identity checks."""

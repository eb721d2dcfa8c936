"""Test package for the double octic toolkit."""

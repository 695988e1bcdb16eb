"""Test suite for weavekit."""

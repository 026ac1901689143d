"""Test fixtures for polyconn tests."""

"""Tests for the amt-kernel package."""

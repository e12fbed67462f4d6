"""Testing module for the graph-state coding toolkit"""

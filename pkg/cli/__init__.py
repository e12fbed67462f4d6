"""Command-line front end"""
from .app import create_cli, main
from .commands import register_commands
from .reporting import build_report, render_json, render_text

__all__ = ['create_cli', 'main', 'register_commands', 'build_report', 'render_json', 'render_text']

"""Pure discrete spectrum checks for cubic Pisot substitutions and Kenyon tilings."""

__version__ = "0.1.0"

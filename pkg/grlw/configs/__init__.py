"""
grlw Presets

key = value files, one per published experiment. List them with
``grlw presets``.
"""

"""
grlw Tests
"""

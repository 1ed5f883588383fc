"""
Setup script for backward compatibility and post-install hooks
"""
from setuptools import setup
from setuptools.command.install import install


class PostInstallCommand(install):
    """Post-installation for installation mode."""

    def run(self):
        install.run(self)

        message = """
grlw installed.

Quick start:
  grlw presets
  grlw soliton --preset soliton-p2
  grlw info
"""
        try:
            from rich.console import Console
            from rich.panel import Panel

            Console().print(Panel.fit(
                message,
                title="[bold blue]grlw Installation Complete[/bold blue]",
                border_style="green"
            ))
        except ImportError:
            print(message)


if __name__ == "__main__":
    setup(
        cmdclass={
            'install': PostInstallCommand,
        }
    )

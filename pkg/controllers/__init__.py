from controllers.command_controller import CommandController

__all__ = ['CommandController']

class FlowIntegrationError(Exception):
    """
    Raised when the gradient flow cannot continue.

    Attributes:
        - last_good (StructureTuple): Last finite state reached by the integrator.
        - step (int): Index of the step that failed.
    """

    def __init__(self, reason, last_good=None, step=None):
        self.last_good = last_good
        self.step = step
        message = f"Flow integration failed{' at step ' + str(step) if step is not None else ''}: {reason}"
        super().__init__(message)


class FlowConfigError(Exception):
    def __init__(self, setting, value, requirement):
        super().__init__(f"Invalid flow setting {setting}={value}: {requirement}.")

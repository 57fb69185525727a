import abc


class BaseSampler(object):
    """
    Builds a fixed list of instances once. Subclasses implement build_instances().
    """


    def __init__(self):

        self._instances = self.build_instances()


    @abc.abstractmethod
    def build_instances(self):
        """Should return a list of instances."""
        pass


    def get_instances(self):

        return self._instances

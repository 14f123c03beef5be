"""Tool-length-robust box pushing: kinematics, simulator, learning, replay."""

__version__ = "0.1.0"

from app.lab_app import LiarGameLab

__all__ = ["LiarGameLab"]

# Module principal: discriminants mixtes, volumes mixtes et inégalités
__version__ = "1.0.0"

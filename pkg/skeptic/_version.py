__version__ = "0.1.0"
f"""Current skeptic version is {__version__}"""

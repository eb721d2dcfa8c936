"""Setup configuration for the double octic arrangements toolkit."""
from setuptools import setup, find_packages

setup(
    name="octic-arrangements",
    version="1.0.0",
    packages=find_packages(exclude=("tests",)),
    python_requires=">=3.9",
    install_requires=[
        "fastapi>=0.104.1",
        "uvicorn>=0.24.0",
        "pydantic>=2.10.0",
        "numpy>=1.24",
        "sympy>=1.12",
        "pytest>=7.4.3",
        "httpx>=0.25.2",
        "pytest-asyncio>=0.21.0",
    ],
    entry_points={
        "console_scripts": [
            "octic=src.cli:main",
            "octic-server=src.main:main",
        ],
    },
)

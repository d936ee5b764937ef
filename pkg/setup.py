from setuptools import find_packages, setup


name = "django-seedmatch"
description = "Seeded graph matching for Django projects: solver, simulations and CLI"
author = "Luke Burden"
author_email = "lukeburden@gmail.com"
url = "https://github.com/lukeburden/django-seedmatch"

with open("README.md", "r") as fh:
    long_description = fh.read()

install_requires = [
    "django>=3.2,<5",
    "django-konst>=2,<3",
    "numpy>=1.20,<3",
    "scipy>=1.6,<2",
]

tests_require = [
    "pytest>=6,<9",
    "pytest-django>=4,<5",
    "pytest-mock>=3,<4",
    "model_mommy>=2,<3",
]

setup(
    name=name,
    author=author,
    author_email=author_email,
    description=description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    version="0.1.0",
    license="MIT",
    url=url,
    packages=find_packages(exclude=["tests", "testproj"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Framework :: Django",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=install_requires,
    extras_require={"test": tests_require},
    tests_require=tests_require,
    zip_safe=False,
)

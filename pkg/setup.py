import re

from setuptools import setup, find_packages

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('requirements.txt') as requirements_file:
    requirements = [r.strip() for r in requirements_file.read().split('\n') if r.strip()]

with open('py_lplab/__init__.py') as init_file:
    version = re.search(r"^__version__ = '([^']+)'", init_file.read(), re.MULTILINE).group(1)

setup(
    python_requires='>=3.7',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Laguerre-Polya class criteria from second quotients of power series",
    entry_points={'console_scripts': ['lplab = py_lplab.cli:main']},
    extras_require={'test': ['hypothesis']},
    install_requires=requirements,
    license="MIT",
    long_description='\n' + readme,
    long_description_content_type="text/markdown",
    include_package_data=False,
    keywords='Laguerre-Polya entire functions real zeros partial theta',
    name='py-lplab',
    packages=find_packages(include=['py_lplab']),
    version=version,
    platforms=['Any'],
    zip_safe=False,
)

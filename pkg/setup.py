from setuptools import setup, find_packages


def readme():
    with open('README.md', 'r', encoding="utf-8") as f:
        return f.read()


setup(
    name='PyTidyKoszul',
    version='0.1.0',
    description='Exact tidy revlex-universal Gröbner bases, strong Koszulness certificates and apolar ideals.',
    long_description=readme(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'sympy>=1.12'
    ],
    extras_require={
        'tests': ['pytest']
    },
    entry_points={
        'console_scripts': ['tidykoszul=PyTidyKoszul.cli:main']
    },
    classifiers=[
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    python_requires='>=3.8'
)

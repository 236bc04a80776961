from setuptools import setup, find_packages

version = '0.1.0'


def get_requirements(file_path):
    with open(file_path) as f:
        return [line for line in f if line and not line.startswith('-')]


setup(
    name='classgraph',
    version=version,
    description="""Graphs of the conjugacy classes a group induces on its normal subgroups, and audits of their structure.""",
    long_description=open('README.rst').read(),
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    install_requires=get_requirements('requirements/common.txt') + ["django>=3.2"],
    tests_require=get_requirements('requirements/development.txt'),
    setup_requires=[
        'pytest-runner',
    ],
    entry_points={
        'console_scripts': [
            'classgraph = classgraph.__main__:main',
        ],
    },
    license="BSD",
    zip_safe=False,
    keywords='group theory conjugacy classes normal subgroups permutation groups',
    classifiers=[
        'Framework :: Django',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)

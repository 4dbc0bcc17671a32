"""
Operational Configuration
-------------------------

skeptic configures itself at the library level.  When it is first asked for
its configuration it looks for a config file at its default path (see
:attr:`~skeptic.util.VenvDetector.confpath`), or at the value of the
environment variable `SKEPTIC_CONFIG` if it is set.  If there is no file
there, one full of default settings is written, so that a user can see and
edit every knob.

The file has one block per experiment driver plus a general block:

  * ``[skeptic]``: log level and the directory results go to
  * ``[simulation]``: label counts, imprecision levels and sample sizes of
    the exact-versus-approximate study
  * ``[timing]``: label counts and instances of the timing study
  * ``[dataset]``: protocol, corruption, hyper-parameter sweeps and splits of
    the dataset study

The defaults are desk scale.  Full-scale sample sizes are the defaults of
:class:`~skeptic.models.ExperimentConfig` and are selected on the command
line with ``--full-scale``.

"""
import configparser
from pathlib import Path
from os import environ as env
from skeptic.util import AttrDict, VenvDetector
from skeptic._version import __version__
import logging
from typing import Optional, Union

try:
    from dotenv import load_dotenv

    load_dotenv()
except Exception:
    pass

logger = logging.getLogger(__name__)


class SkepticConfig:
    """The configuation object

    Mostly a wrapper around :py:mod:`configparser`, with each block wrapped
    in :py:class:`skeptic.util.AttrDict`

    """

    configs = dict()

    @classmethod
    def get_config(cls) -> "SkepticConfig":
        cfg_fname = str(cls.what_config_file(VenvDetector().confpath))
        if len(cls.configs) and cfg_fname in cls.configs:
            return cls.configs[cfg_fname]
        new_config = SkepticConfig()
        cls.configs[cfg_fname] = new_config
        return new_config

    @staticmethod
    def what_config_file(default_pathname: Union[str, Path] = None) -> Path:
        """Determine what config file to read.

        Encapsulates the search for a file pointed to by the environment
        setting `SKEPTIC_CONFIG`, falling back to `default_pathname` and then
        to the detected default location.

        """
        if default_pathname is None:
            default_pathname = VenvDetector().confpath
        return Path(env.get("SKEPTIC_CONFIG", str(default_pathname)))

    @staticmethod
    def setup_config(
        cp: configparser.ConfigParser,
    ) -> configparser.ConfigParser:
        """Setup default config pattern on the parser passed in

        :param configparser.ConfigParser cp: a
           :py:class:`configparser.ConfigParser` instance to hold the
           default config

        This routine establishes the default configuration.  It returns
        the same object which was passed to it.
        """
        cp["skeptic"] = {
            "log_level": "INFO",
            "output_dir": "results",
        }
        cp["simulation"] = {
            "m_values": "2,3,4,5,6",
            "epsilons": "0.05,0.15,0.25,0.35,0.45",
            "trees_per_cell": 200,
            "repetitions": 3,
            "seed": 1234,
            "early_skip": False,
        }
        cp["timing"] = {
            "m_values": "3,4,5,6,7",
            "instances": 5,
            "epsilon": 0.05,
            "seed": 1234,
        }
        cp["dataset"] = {
            "protocol": "corruption",
            "corruption": "missing",
            "levels": "0,20,40,60,80",
            "beta": 0.5,
            "per_column": False,
            "bins": 5,
            "s_values": "0,0.5,1.5,2.5,3.5,4.5,5.5",
            "gammas": "0,0.15,0.25,0.35,0.45",
            "c_sep": "0.05,0.1,0.2,0.3,0.4,0.5",
            "c_par": "0.1,0.25,0.5,0.75,1.0",
            "methods": "skeptic,precise,reject,abstain-sep,abstain-par",
            "cv_repeats": 10,
            "cv_folds": 10,
            "train_fractions": "10,20,30,40,50,60,70,80,90",
            "downsample_repeats": 50,
            "seed": 1234,
        }
        return cp

    @staticmethod
    def write_config(cp, fn) -> Path:
        """Write the ConfigParser contents to disk.

        :param configparser.ConfigParser cp: a ConfigParser object
        :param Union[str, pathlib.Path] fn: path of the config file to write

        If the location's parent directory does not exist, an attempt is made
        to create it.  Returns a :class:`pathlib.Path` which points at the
        newly-written file.

        """
        config_file = Path(fn)
        if not config_file.parent.exists():
            try:  # attempt to make any missing parent directories
                config_file.parent.mkdir(0o777, True)
            except OSError as e:
                logger.error(
                    "The specified config file's directory did not exist and"
                    f" could not be created.  File: {str(config_file)}"
                )
                raise e
        with config_file.open("w") as fh:
            cp.write(fh)
        return config_file

    def __init__(self, config_file: Union[str, Path, None] = None):
        """Setup a new SkepticConfig instance

        :param config_file: optional explicit location, used by the command
          line's ``--config`` option; otherwise :meth:`what_config_file`
          decides

        Defaults are installed first.  If the file exists its settings are
        overlaid on them, otherwise the defaults are written to it.  A
        location which cannot be written is not fatal: the defaults are used
        and a warning is logged.

        """
        config_file = Path(config_file or SkepticConfig.what_config_file())
        self.configparser = configparser.ConfigParser(interpolation=None)
        SkepticConfig.setup_config(self.configparser)

        if config_file.exists():
            logger.debug("Reading from config file " + str(config_file))
            self.configparser.read(str(config_file))
        else:
            try:
                logger.debug("Writing new config file " + str(config_file))
                SkepticConfig.write_config(self.configparser, config_file)
            except OSError:
                logger.warning(
                    f"Could not write config file {config_file};"
                    " using defaults"
                )
        self.configparser["skeptic"]["config_file"] = str(config_file)
        self.configparser["skeptic"]["version"] = f"skeptic v{__version__}"
        self.skeptic = AttrDict(self.configparser["skeptic"])
        self.simulation = AttrDict(self.configparser["simulation"])
        self.timing = AttrDict(self.configparser["timing"])
        self.dataset = AttrDict(self.configparser["dataset"])

    def get_block(self, blockname) -> Optional[AttrDict]:
        """Attempt to get a top-level block of the config as an AttrDict.

        :param str blockname: the name of the block

        Return `None` if it cannot be found.

        """
        try:
            return AttrDict(self.configparser[blockname])
        except KeyError:
            pass
        return None

    def write(self, location: Union[str, Path] = None) -> Path:
        """Write the current config to disk.

        :param Union[str,pathlib.Path] location: where to write the file

        The `config_file` and `version` entries of the `[skeptic]` block are
        not settings, so they are removed while writing and then restored.

        """
        location = Path(location or self.skeptic.config_file)
        config_file = self.skeptic.config_file
        version = self.skeptic.version
        self.configparser.remove_option("skeptic", "config_file")
        self.configparser.remove_option("skeptic", "version")
        result = SkepticConfig.write_config(self.configparser, location)
        self.configparser["skeptic"]["config_file"] = config_file
        self.configparser["skeptic"]["version"] = version
        return result

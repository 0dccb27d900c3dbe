"""Parameters file"""

import pathlib

import rbcommon

INIFILE = pathlib.Path(__file__).with_name("rbident.ini")

DEFAULTS = {
    "verify": {"grid": "6", "samples": "200", "bound": "3", "seed": "42", "budget": "4000"},
    "idspace": {"batch": "6", "stable_batches": "3", "max_batches": "400"},
    "worker": {"threads": "1"},
    "repro": {"deg5_search": "no"},
}

config = rbcommon.readconfig(INIFILE, DEFAULTS)

threads = config.getint("worker", "threads")  # Overridden by --threads / RBIDENT_THREADS
seed = config.getint("verify", "seed")

# ===============================================================================
if __name__ == "__main__":

    for section in config.sections():
        print(section, dict(config[section]))

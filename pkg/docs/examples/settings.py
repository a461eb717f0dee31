# begin import
from derangelab import (LayeredSettings, Defaults, INIFile, Environment,
                        load_run_config)
from derangelab.config import default_settings
# end import

# begin inifile
with open("derange-lab.ini", "w") as fp:
    fp.write("""
[__root__]
format = json
jobs = 2

[bider]
max_n = 4
""")
# end inifile

# begin layered
environ = {"DERANGE_LAB_JOBS": "3", "DERANGE_LAB_SWEEP__MAX_N": "7"}
settings = LayeredSettings(Defaults(default_settings()),
                           INIFile("derange-lab.ini"),
                           Environment(environ, prefix="DERANGE_LAB_"))
print(settings.format)       # json, from the INI file
print(settings.jobs)         # 3, the environment wins and is typed as int
print(settings.bider.max_n)  # 4
print(LayeredSettings.where(settings, "jobs"))  # environment
# end layered

# begin runconfig
config = load_run_config(environ=dict(environ,
                                      DERANGE_LAB_CONFIG="derange-lab.ini"))
print(config.budgets)
# end runconfig

return_value = (settings.format, settings.jobs, settings.bider.max_n,
                config.budgets.sweep_max_n)

from exteriorcov.api.commands.census_commands import register as register_census
from exteriorcov.api.commands.lie_commands import register as register_lie
from exteriorcov.api.commands.selftest_commands import register as register_selftest
from exteriorcov.api.commands.sln_commands import register as register_sln

REGISTRARS = (register_lie, register_census, register_sln, register_selftest)

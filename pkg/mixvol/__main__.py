from mixvol.main import cli

cli(prog_name="mixvol")

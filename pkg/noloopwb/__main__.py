from noloopwb.cli.main import main

main()

from zslab.cli.main import main

main()

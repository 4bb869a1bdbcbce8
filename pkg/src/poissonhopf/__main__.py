from poissonhopf.cli import main

main()

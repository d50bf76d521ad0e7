from exteriorcov.main import main

main()

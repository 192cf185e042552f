from hamvis.cli import main

main()

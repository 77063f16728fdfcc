from ludoscene.cli import main

main()

from fanolab.app.main import main

main()

"""fanolab application package: calculation layers and the command line."""

from galoiskit.console.main import main as main

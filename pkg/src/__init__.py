# Termination certificate checker

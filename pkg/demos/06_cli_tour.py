# The same computations through the command-line entry point.
from fpzeta.cli import main

main(["compute", "--ring", "heisenberg", "--prime", "3", "--flavor", "ideal"])
main(["compute", "--ring", "M", "--param", "c=4", "--prime", "5", "--format", "text"])
main(["compute", "--ring", "heisenberg", "--prime", "4"])  # exits 2 from the shell
main(["verify", "--suite", "grenham"])
main(["scan", "--ring", "heisenberg", "--flavor", "ideal", "--primes", "2:31", "--degree", "2", "--compact"])

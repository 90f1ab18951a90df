try:
    import sys
    import os
    sys.path.append(os.getcwd())

    print("Verifying imports...")
    import orbitlattice.main
    import orbitlattice.combinatorics.intersections
    import orbitlattice.combinatorics.rscells
    import orbitlattice.tools.verify
    import orbitlattice.tools.oracles
    print("All modules imported successfully!")
except Exception as e:
    print(f"Import failed: {e}")
    import traceback
    traceback.print_exc()

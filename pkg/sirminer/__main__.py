import sys

from sirminer.main import main

sys.exit(main())

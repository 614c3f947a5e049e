from .errors import *
from .config import *
from .symalg import *
from .parsing import *
from .rootsys import *
from .grading import *
from .monge import *
from .cohomology import *
from .nilrealize import *
from .mcforms import *
from .symsolver import *

__version__ = "0.1"
__all__ = [ *errors.__all__, *config.__all__, *symalg.__all__, *parsing.__all__,
            *rootsys.__all__, *grading.__all__, *monge.__all__, *cohomology.__all__,
            *nilrealize.__all__, *mcforms.__all__, *symsolver.__all__ ]

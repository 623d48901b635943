from .apolarity import ApolarityMethods
from .gallery import GalleryMethods
from .grobner import GrobnerMethods
from .koszul import KoszulMethods
from .tidyuniversal import UniversalMethods

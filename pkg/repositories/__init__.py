from repositories.extremal_repository import ExtremalRepository, ScanResult, scan_extremes, get_repository
from repositories.reference_constants import ReferenceConstantsRepository, ReferenceConstant

__all__ = [
    'ExtremalRepository', 'ScanResult', 'scan_extremes', 'get_repository',
    'ReferenceConstantsRepository', 'ReferenceConstant',
]

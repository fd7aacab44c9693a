from models.poly import Poly
from models.sector_point import SectorPoint, from_angle
from models.bilinear_form import SymBilinearForm
from models.linear_form import sup_linear
from models.extremal_param import ExtremalParam, Family, p_family, q_family, corner
from models.branch_curve import BranchCurve, CurveRelation
from models.scan_config import ScanConfig
from models.output_record import OutputRecord, RecordKind, OutputFormat

__all__ = [
    'Poly', 'SectorPoint', 'from_angle', 'SymBilinearForm', 'sup_linear',
    'ExtremalParam', 'Family', 'p_family', 'q_family', 'corner',
    'BranchCurve', 'CurveRelation', 'ScanConfig', 'OutputRecord', 'RecordKind', 'OutputFormat',
]

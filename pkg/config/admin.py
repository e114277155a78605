from django.contrib.admin import AdminSite


class DetidealsAdminSite(AdminSite):
    """
    Админка для просмотра запусков проверок и отчётов
    """
    site_header = 'Админка detideals'
    site_title = 'detideals'
    index_title = 'Запуски проверок и отчёты'


admin_site = DetidealsAdminSite(name='admin')
